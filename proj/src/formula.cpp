#include "subneg/formula.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace subneg {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::size_t node_hash(Kind k, const std::string& atom, const FormulaPtr& l, const FormulaPtr& r) {
    std::size_t h = static_cast<std::size_t>(k) * 0x100000001b3ULL + 0xcbf29ce484222325ULL;
    if (k == Kind::Atom) h = mix(h, std::hash<std::string>{}(atom));
    if (l) h = mix(h, l->hash);
    if (r) h = mix(h, r->hash);
    return h;
}

int node_weight(Kind k, const FormulaPtr& l, const FormulaPtr& r) {
    switch (k) {
        case Kind::Atom:
        case Kind::Top: return 1;
        case Kind::Neg: return l->weight + 1;
        default: return l->weight + r->weight + 1;
    }
}

}  // namespace

Formula::Formula(Kind k, std::string a, FormulaPtr l, FormulaPtr r)
    : kind(k),
      atom(std::move(a)),
      lhs(std::move(l)),
      rhs(std::move(r)),
      weight(node_weight(k, lhs, rhs)),
      hash(node_hash(k, atom, lhs, rhs)) {}

FormulaPtr Formula::make_atom(std::string name) {
    return std::make_shared<Formula>(Kind::Atom, std::move(name), nullptr, nullptr);
}
FormulaPtr Formula::make_top() {
    static const FormulaPtr top = std::make_shared<Formula>(Kind::Top, "", nullptr, nullptr);
    return top;
}
FormulaPtr Formula::make_neg(FormulaPtr f) {
    return std::make_shared<Formula>(Kind::Neg, "", std::move(f), nullptr);
}
FormulaPtr Formula::make_and(FormulaPtr l, FormulaPtr r) {
    return std::make_shared<Formula>(Kind::And, "", std::move(l), std::move(r));
}
FormulaPtr Formula::make_or(FormulaPtr l, FormulaPtr r) {
    return std::make_shared<Formula>(Kind::Or, "", std::move(l), std::move(r));
}
FormulaPtr Formula::make_imp(FormulaPtr l, FormulaPtr r) {
    return std::make_shared<Formula>(Kind::Imp, "", std::move(l), std::move(r));
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->hash != b->hash || a->kind != b->kind || a->weight != b->weight) return false;
    switch (a->kind) {
        case Kind::Atom: return a->atom == b->atom;
        case Kind::Top: return true;
        case Kind::Neg: return equal(a->lhs, b->lhs);
        default: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    }
}

int compare(const FormulaPtr& a, const FormulaPtr& b) {
    if (a.get() == b.get()) return 0;
    if (a->kind != b->kind)
        return static_cast<int>(a->kind) < static_cast<int>(b->kind) ? -1 : 1;
    switch (a->kind) {
        case Kind::Atom: return a->atom.compare(b->atom);
        case Kind::Top: return 0;
        case Kind::Neg: return compare(a->lhs, b->lhs);
        default: {
            int c = compare(a->lhs, b->lhs);
            return c != 0 ? c : compare(a->rhs, b->rhs);
        }
    }
}

bool is_atom(const FormulaPtr& f) { return f->kind == Kind::Atom; }
bool is_negation(const FormulaPtr& f) { return f->kind == Kind::Neg; }
bool is_disjunction(const FormulaPtr& f) { return f->kind == Kind::Or; }

// ── Printer ─────────────────────────────────────────────────────────────────
// Levels: -> is 1 (right-assoc), | is 2 (left-assoc), & is 3 (left-assoc),
// ~ is 4, atoms and T are 5.  A node is parenthesised when its level is
// below the minimum required at its position.

namespace {

int level(const FormulaPtr& f) {
    switch (f->kind) {
        case Kind::Imp: return 1;
        case Kind::Or: return 2;
        case Kind::And: return 3;
        case Kind::Neg: return 4;
        default: return 5;
    }
}

void print_rec(std::string& out, const FormulaPtr& f, int min_level) {
    bool paren = level(f) < min_level;
    if (paren) out += '(';
    switch (f->kind) {
        case Kind::Atom: out += f->atom; break;
        case Kind::Top: out += 'T'; break;
        case Kind::Neg:
            out += '~';
            print_rec(out, f->lhs, 4);
            break;
        case Kind::And:
            print_rec(out, f->lhs, 3);
            out += " & ";
            print_rec(out, f->rhs, 4);
            break;
        case Kind::Or:
            print_rec(out, f->lhs, 2);
            out += " | ";
            print_rec(out, f->rhs, 3);
            break;
        case Kind::Imp:
            print_rec(out, f->lhs, 2);
            out += " -> ";
            print_rec(out, f->rhs, 1);
            break;
    }
    if (paren) out += ')';
}

}  // namespace

std::string to_string(const FormulaPtr& f) {
    std::string out;
    print_rec(out, f, 0);
    return out;
}

// ── Parser ──────────────────────────────────────────────────────────────────

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos, msg); }

    bool match(std::string_view tok) {
        skip_ws();
        if (s.substr(pos, tok.size()) == tok) {
            pos += tok.size();
            return true;
        }
        return false;
    }

    static bool ident_cont(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    FormulaPtr parse_primary() {
        skip_ws();
        if (pos >= s.size()) fail("expected formula");
        char c = s[pos];
        if (c == '~') {
            pos++;
            return Formula::make_neg(parse_primary());
        }
        if (c == '(') {
            pos++;
            FormulaPtr f = parse_iff();
            skip_ws();
            if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
            pos++;
            return f;
        }
        if (c == 'T' && (pos + 1 >= s.size() || !ident_cont(s[pos + 1]))) {
            pos++;
            return Formula::make_top();
        }
        if (c >= 'a' && c <= 'z') {
            std::size_t start = pos;
            pos++;
            while (pos < s.size() && ident_cont(s[pos])) pos++;
            return Formula::make_atom(std::string(s.substr(start, pos - start)));
        }
        fail("expected formula");
    }

    FormulaPtr parse_and() {
        FormulaPtr f = parse_primary();
        while (true) {
            skip_ws();
            if (pos < s.size() && s[pos] == '&') {
                pos++;
                f = Formula::make_and(f, parse_primary());
            } else {
                return f;
            }
        }
    }

    FormulaPtr parse_or() {
        FormulaPtr f = parse_and();
        while (true) {
            skip_ws();
            if (pos < s.size() && s[pos] == '|') {
                pos++;
                f = Formula::make_or(f, parse_and());
            } else {
                return f;
            }
        }
    }

    FormulaPtr parse_imp() {
        FormulaPtr f = parse_or();
        if (match("->")) return Formula::make_imp(f, parse_imp());
        return f;
    }

    FormulaPtr parse_iff() {
        FormulaPtr f = parse_imp();
        if (match("<->")) {
            FormulaPtr g = parse_imp();
            skip_ws();
            if (s.substr(pos, 3) == "<->") fail("'<->' does not chain");
            return Formula::make_and(Formula::make_imp(f, g), Formula::make_imp(g, f));
        }
        return f;
    }
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
    Parser p{text};
    FormulaPtr f = p.parse_iff();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("unexpected trailing input");
    return f;
}

// ── Subformulas and language ────────────────────────────────────────────────

namespace {

void collect_sub(const FormulaPtr& f,
                 std::unordered_set<FormulaPtr, FormulaHash, FormulaEq>& seen) {
    if (!seen.insert(f).second) return;
    switch (f->kind) {
        case Kind::Neg: collect_sub(f->lhs, seen); break;
        case Kind::And:
        case Kind::Or:
        case Kind::Imp:
            collect_sub(f->lhs, seen);
            collect_sub(f->rhs, seen);
            break;
        default: break;
    }
}

}  // namespace

std::vector<FormulaPtr> subformula_closure(std::span<const FormulaPtr> fs) {
    std::unordered_set<FormulaPtr, FormulaHash, FormulaEq> seen;
    for (const auto& f : fs) collect_sub(f, seen);
    std::vector<FormulaPtr> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), FormulaLess{});
    return out;
}

std::size_t subformula_count(std::span<const FormulaPtr> fs) {
    std::unordered_set<FormulaPtr, FormulaHash, FormulaEq> seen;
    for (const auto& f : fs) collect_sub(f, seen);
    return seen.size();
}

std::set<std::string> language(std::span<const FormulaPtr> fs) {
    std::set<std::string> out;
    std::unordered_set<FormulaPtr, FormulaHash, FormulaEq> seen;
    for (const auto& f : fs) collect_sub(f, seen);
    for (const auto& f : seen)
        if (f->kind == Kind::Atom) out.insert(f->atom);
    return out;
}

}  // namespace subneg
