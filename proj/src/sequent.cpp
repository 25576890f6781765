#include "subneg/sequent.hpp"

#include <algorithm>

namespace subneg {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

Context::const_iterator find_in(const Context& ctx, const FormulaPtr& f) {
    auto it = std::lower_bound(ctx.begin(), ctx.end(), f, FormulaLess{});
    if (it != ctx.end() && equal(*it, f)) return it;
    return ctx.end();
}

}  // namespace

bool ctx_contains(const Context& ctx, const FormulaPtr& f) {
    return find_in(ctx, f) != ctx.end();
}

Context ctx_add(const Context& ctx, const FormulaPtr& f) {
    Context out = ctx;
    out.insert(std::lower_bound(out.begin(), out.end(), f, FormulaLess{}), f);
    return out;
}

Context ctx_remove_one(const Context& ctx, const FormulaPtr& f) {
    Context out = ctx;
    auto it = std::lower_bound(out.begin(), out.end(), f, FormulaLess{});
    if (it != out.end() && equal(*it, f)) out.erase(it);
    return out;
}

Context ctx_union(const Context& a, const Context& b) {
    Context out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), FormulaLess{});
    return out;
}

Context make_context(std::vector<FormulaPtr> fs) {
    std::sort(fs.begin(), fs.end(), FormulaLess{});
    return fs;
}

Context set_add(const Context& ctx, const FormulaPtr& f) {
    if (ctx_contains(ctx, f)) return ctx;
    return ctx_add(ctx, f);
}

Context make_set(std::vector<FormulaPtr> fs) {
    std::sort(fs.begin(), fs.end(), FormulaLess{});
    fs.erase(std::unique(fs.begin(), fs.end(),
                         [](const FormulaPtr& a, const FormulaPtr& b) { return equal(a, b); }),
             fs.end());
    return fs;
}

std::size_t ctx_hash(const Context& ctx) {
    std::size_t h = 0x811c9dc5;
    for (const auto& f : ctx) h = mix(h, f->hash);
    return h;
}

bool ctx_equal(const Context& a, const Context& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); i++)
        if (!equal(a[i], b[i])) return false;
    return true;
}

Sequent make_sequent(std::vector<FormulaPtr> ctx, FormulaPtr goal) {
    return Sequent{make_context(std::move(ctx)), std::move(goal)};
}

HistSequent make_hist_sequent(std::vector<FormulaPtr> history, std::vector<FormulaPtr> ctx,
                              FormulaPtr goal) {
    return HistSequent{make_set(std::move(history)), make_set(std::move(ctx)), std::move(goal)};
}

bool equal(const Sequent& a, const Sequent& b) {
    return equal(a.goal, b.goal) && ctx_equal(a.context, b.context);
}

bool equal(const HistSequent& a, const HistSequent& b) {
    return equal(a.goal, b.goal) && ctx_equal(a.context, b.context) &&
           ctx_equal(a.history, b.history);
}

std::size_t SequentHash::operator()(const Sequent& s) const {
    return mix(ctx_hash(s.context), s.goal->hash);
}

namespace {

std::string join(const Context& ctx) {
    std::string out;
    for (std::size_t i = 0; i < ctx.size(); i++) {
        if (i) out += ", ";
        out += to_string(ctx[i]);
    }
    return out;
}

}  // namespace

std::string to_string(const Sequent& s) {
    std::string out = join(s.context);
    if (!out.empty()) out += ' ';
    out += "=> " + to_string(s.goal);
    return out;
}

std::string to_string(const HistSequent& s) {
    std::string out = "[" + join(s.history) + "] | " + join(s.context);
    if (!s.context.empty()) out += ' ';
    out += "=> " + to_string(s.goal);
    return out;
}

std::string to_string(const SplitSequent& s) {
    return join(s.gamma) + " ; " + join(s.delta) + " => " + to_string(s.goal);
}

// ── Parsing ─────────────────────────────────────────────────────────────────
// None of `,` `;` `=>` can occur inside a formula, so splitting the raw text
// on them is safe.

namespace {

std::vector<FormulaPtr> parse_list(std::string_view text, std::size_t base) {
    std::vector<FormulaPtr> out;
    std::size_t start = 0;
    bool only_ws = text.find_first_not_of(" \t\r\n") == std::string_view::npos;
    if (only_ws) return out;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view piece = text.substr(start, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - start);
        try {
            out.push_back(parse_formula(piece));
        } catch (const ParseError& e) {
            throw ParseError(base + start + e.offset, "bad context formula");
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

Sequent parse_sequent(std::string_view text) {
    std::size_t arrow = text.find("=>");
    if (arrow == std::string_view::npos) return make_sequent({}, parse_formula(text));
    std::vector<FormulaPtr> ctx = parse_list(text.substr(0, arrow), 0);
    std::string_view rhs = text.substr(arrow + 2);
    FormulaPtr goal;
    try {
        goal = parse_formula(rhs);
    } catch (const ParseError& e) {
        throw ParseError(arrow + 2 + e.offset, "bad goal formula");
    }
    return make_sequent(std::move(ctx), std::move(goal));
}

SplitSequent parse_split_sequent(std::string_view text) {
    std::size_t semi = text.find(';');
    if (semi == std::string_view::npos)
        throw ParseError(text.size(), "split sequent needs a ';' between the two parts");
    std::size_t arrow = text.find("=>", semi);
    if (arrow == std::string_view::npos)
        throw ParseError(text.size(), "split sequent needs '=>'");
    SplitSequent out;
    out.gamma = make_context(parse_list(text.substr(0, semi), 0));
    out.delta = make_context(parse_list(text.substr(semi + 1, arrow - semi - 1), semi + 1));
    try {
        out.goal = parse_formula(text.substr(arrow + 2));
    } catch (const ParseError& e) {
        throw ParseError(arrow + 2 + e.offset, "bad goal formula");
    }
    return out;
}

Sequent merge(const SplitSequent& s) {
    return Sequent{ctx_union(s.gamma, s.delta), s.goal};
}

std::set<std::string> common_language(const SplitSequent& s) {
    std::set<std::string> left = language(s.gamma);
    Context right_side = ctx_add(s.delta, s.goal);
    std::set<std::string> right = language(right_side);
    std::set<std::string> out;
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                          std::inserter(out, out.begin()));
    return out;
}

}  // namespace subneg
