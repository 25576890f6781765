#include "subneg/proof.hpp"

#include <algorithm>

#include <json.hpp>

#include "subneg/g3.hpp"
#include "subneg/hist.hpp"

namespace subneg {

std::string to_string(Flavor f) {
    switch (f) {
        case Flavor::Plain: return "plain";
        case Flavor::Hist: return "hist";
        case Flavor::PlainLenient: return "plain_lenient";
    }
    return "?";
}

ProofPtr make_proof_node(Rule rule, FormulaPtr principal, Context history, Context context,
                         FormulaPtr goal, std::vector<ProofPtr> children) {
    auto n = std::make_shared<ProofNode>();
    n->rule = rule;
    n->principal = std::move(principal);
    n->history = std::move(history);
    n->context = std::move(context);
    n->goal = std::move(goal);
    n->children = std::move(children);
    return n;
}

Sequent conclusion_plain(const ProofNode& n) { return Sequent{n.context, n.goal}; }
HistSequent conclusion_hist(const ProofNode& n) {
    return HistSequent{n.history, n.context, n.goal};
}

int proof_height(const ProofNode& n) {
    int h = 0;
    for (const auto& c : n.children) h = std::max(h, proof_height(*c));
    return h + 1;
}

int proof_size(const ProofNode& n) {
    int s = 1;
    for (const auto& c : n.children) s += proof_size(*c);
    return s;
}

// ── Checking ────────────────────────────────────────────────────────────────

namespace {

struct Checker {
    Logic logic;
    Flavor flavor;
    CheckResult failure;

    bool fail(const std::string& path, std::string reason) {
        failure = {false, path, std::move(reason)};
        return false;
    }

    bool same_principal(const FormulaPtr& a, const FormulaPtr& b) {
        if (!a && !b) return true;
        if (!a || !b) return false;
        return equal(a, b);
    }

    // Exact schema matching via instance enumeration: the node must be one of
    // the backward-applicable instances at its own conclusion.
    bool check_plain_node(const ProofNode& n, const std::string& path) {
        if (!is_plain_rule(n.rule))
            return fail(path, "rule '" + std::string(rule_name(n.rule)) +
                                  "' is not a plain-calculus rule");
        if (!rule_in_logic(n.rule, logic))
            return fail(path, "rule '" + std::string(rule_name(n.rule)) + "' is not in logic " +
                                  to_string(logic));
        if (!n.history.empty()) return fail(path, "plain node carries a history");
        Sequent conclusion = conclusion_plain(n);
        for (const RuleInstance& inst : rule_instances(conclusion, logic)) {
            if (inst.rule != n.rule || !same_principal(inst.principal, n.principal)) continue;
            if (inst.premises.size() != n.children.size())
                return fail(path, "premise count mismatch for rule '" +
                                      std::string(rule_name(n.rule)) + "'");
            for (std::size_t i = 0; i < inst.premises.size(); i++) {
                Sequent got = conclusion_plain(*n.children[i]);
                if (!equal(got, inst.premises[i]))
                    return fail(path + "." + std::to_string(i),
                                "premise does not match the schema: expected '" +
                                    to_string(inst.premises[i]) + "', got '" + to_string(got) +
                                    "'");
            }
            for (std::size_t i = 0; i < n.children.size(); i++)
                if (!check_plain_node(*n.children[i], path + "." + std::to_string(i)))
                    return false;
            return true;
        }
        return fail(path, "no instance of rule '" + std::string(rule_name(n.rule)) +
                              "' applies at '" + to_string(conclusion) + "'");
    }

    bool check_hist_node(const ProofNode& n, const std::string& path) {
        if (!is_hist_rule(n.rule))
            return fail(path, "rule '" + std::string(rule_name(n.rule)) +
                                  "' is not a history-calculus rule");
        if (!rule_in_logic(n.rule, logic))
            return fail(path, "rule '" + std::string(rule_name(n.rule)) + "' is not in logic " +
                                  to_string(logic));
        for (const FormulaPtr& h : n.history)
            if (!is_atom(h) && !is_negation(h) && !is_disjunction(h))
                return fail(path, "history entry '" + to_string(h) +
                                      "' is not an atom, negation or disjunction");
        HistSequent conclusion = conclusion_hist(n);
        for (const HistRuleInstance& inst : hist_rule_instances(conclusion, logic)) {
            if (inst.rule != n.rule || !same_principal(inst.principal, n.principal)) continue;
            if (inst.premises.size() != n.children.size())
                return fail(path, "premise count mismatch for rule '" +
                                      std::string(rule_name(n.rule)) + "'");
            for (std::size_t i = 0; i < inst.premises.size(); i++) {
                HistSequent got = conclusion_hist(*n.children[i]);
                if (!equal(got, inst.premises[i]))
                    return fail(path + "." + std::to_string(i),
                                "premise does not match the schema: expected '" +
                                    to_string(inst.premises[i]) + "', got '" + to_string(got) +
                                    "'");
            }
            for (std::size_t i = 0; i < n.children.size(); i++)
                if (!check_hist_node(*n.children[i], path + "." + std::to_string(i)))
                    return false;
            return true;
        }
        return fail(path, "no instance of rule '" + std::string(rule_name(n.rule)) +
                              "' applies at '" + to_string(conclusion) + "' (side condition?)");
    }

    // Lenient matching: contexts are compared as sets, the instantiated
    // schema context may keep the principal (collapsed contraction), and a
    // premise subproof may conclude a subset of the schema premise context
    // (absorbed weakening).
    bool lenient_premise(const ProofNode& child, const Context& allowed_ctx,
                         const FormulaPtr& goal, const std::string& path) {
        if (!equal(child.goal, goal))
            return fail(path, "premise goal mismatch: expected '" + to_string(goal) + "', got '" +
                                  to_string(child.goal) + "'");
        for (const FormulaPtr& f : child.context)
            if (!ctx_contains(allowed_ctx, f))
                return fail(path, "premise context formula '" + to_string(f) +
                                      "' does not occur in the schema premise");
        return true;
    }

    bool check_lenient_node(const ProofNode& n, const std::string& path) {
        if (!is_plain_rule(n.rule))
            return fail(path, "rule '" + std::string(rule_name(n.rule)) +
                                  "' is not a plain-calculus rule");
        if (!rule_in_logic(n.rule, logic))
            return fail(path, "rule '" + std::string(rule_name(n.rule)) + "' is not in logic " +
                                  to_string(logic));
        if (!n.history.empty()) return fail(path, "plain node carries a history");

        Context c = make_set(n.context);
        const FormulaPtr& goal = n.goal;
        const FormulaPtr& p = n.principal;

        auto need_children = [&](std::size_t k) {
            if (n.children.size() == k) return true;
            return fail(path, "premise count mismatch for rule '" +
                                  std::string(rule_name(n.rule)) + "'");
        };
        auto need_principal = [&](Kind kind) {
            if (p && p->kind == kind && ctx_contains(c, p)) return true;
            return fail(path, "principal of rule '" + std::string(rule_name(n.rule)) +
                                  "' missing or not in the context");
        };

        switch (n.rule) {
            case Rule::Ax:
                if (goal->kind != Kind::Atom || !ctx_contains(c, goal))
                    return fail(path, "axiom goal is not an atom in the context");
                return need_children(0);
            case Rule::Top:
                if (goal->kind != Kind::Top) return fail(path, "goal of (top) is not T");
                return need_children(0);
            case Rule::ImpR:
                if (goal->kind != Kind::Imp) return fail(path, "goal of imp_r is not ->");
                if (!need_children(1)) return false;
                return lenient_premise(*n.children[0], set_add(c, goal->lhs), goal->rhs,
                                       path + ".0") &&
                       check_lenient_node(*n.children[0], path + ".0");
            case Rule::AndR:
                if (goal->kind != Kind::And) return fail(path, "goal of and_r is not &");
                if (!need_children(2)) return false;
                return lenient_premise(*n.children[0], c, goal->lhs, path + ".0") &&
                       lenient_premise(*n.children[1], c, goal->rhs, path + ".1") &&
                       check_lenient_node(*n.children[0], path + ".0") &&
                       check_lenient_node(*n.children[1], path + ".1");
            case Rule::OrR1:
            case Rule::OrR2: {
                if (goal->kind != Kind::Or) return fail(path, "goal of or_r is not |");
                if (!need_children(1)) return false;
                const FormulaPtr& sub = n.rule == Rule::OrR1 ? goal->lhs : goal->rhs;
                return lenient_premise(*n.children[0], c, sub, path + ".0") &&
                       check_lenient_node(*n.children[0], path + ".0");
            }
            case Rule::AndL: {
                if (!need_principal(Kind::And) || !need_children(1)) return false;
                Context allowed = set_add(set_add(c, p->lhs), p->rhs);
                return lenient_premise(*n.children[0], allowed, goal, path + ".0") &&
                       check_lenient_node(*n.children[0], path + ".0");
            }
            case Rule::OrL:
                if (!need_principal(Kind::Or) || !need_children(2)) return false;
                return lenient_premise(*n.children[0], set_add(c, p->lhs), goal, path + ".0") &&
                       lenient_premise(*n.children[1], set_add(c, p->rhs), goal, path + ".1") &&
                       check_lenient_node(*n.children[0], path + ".0") &&
                       check_lenient_node(*n.children[1], path + ".1");
            case Rule::ImpL:
                if (!need_principal(Kind::Imp) || !need_children(2)) return false;
                return lenient_premise(*n.children[0], c, p->lhs, path + ".0") &&
                       lenient_premise(*n.children[1], set_add(c, p->rhs), goal, path + ".1") &&
                       check_lenient_node(*n.children[0], path + ".0") &&
                       check_lenient_node(*n.children[1], path + ".1");
            case Rule::N:
                if (goal->kind != Kind::Neg) return fail(path, "goal of (n) is not a negation");
                if (!need_principal(Kind::Neg) || !need_children(2)) return false;
                return lenient_premise(*n.children[0], set_add(c, goal->lhs), p->lhs,
                                       path + ".0") &&
                       lenient_premise(*n.children[1], set_add(c, p->lhs), goal->lhs,
                                       path + ".1") &&
                       check_lenient_node(*n.children[0], path + ".0") &&
                       check_lenient_node(*n.children[1], path + ".1");
            case Rule::Nef:
                if (goal->kind != Kind::Neg) return fail(path, "goal of (nef) is not a negation");
                if (!need_principal(Kind::Neg) || !need_children(1)) return false;
                return lenient_premise(*n.children[0], c, p->lhs, path + ".0") &&
                       check_lenient_node(*n.children[0], path + ".0");
            case Rule::Copc:
                if (goal->kind != Kind::Neg) return fail(path, "goal of (copc) is not a negation");
                if (!need_principal(Kind::Neg) || !need_children(1)) return false;
                return lenient_premise(*n.children[0], set_add(c, goal->lhs), p->lhs,
                                       path + ".0") &&
                       check_lenient_node(*n.children[0], path + ".0");
            case Rule::An:
                if (goal->kind != Kind::Neg) return fail(path, "goal of (an) is not a negation");
                if (p) return fail(path, "(an) has no principal context formula");
                if (!need_children(1)) return false;
                return lenient_premise(*n.children[0], set_add(c, goal->lhs), goal, path + ".0") &&
                       check_lenient_node(*n.children[0], path + ".0");
            default:
                return fail(path, "unexpected rule");
        }
    }
};

}  // namespace

CheckResult check(const ProofTree& t, Logic logic) {
    if (!t.root) return {false, "root", "empty proof"};
    Checker c{logic, t.flavor, {}};
    bool ok = false;
    switch (t.flavor) {
        case Flavor::Plain: ok = c.check_plain_node(*t.root, "root"); break;
        case Flavor::Hist: ok = c.check_hist_node(*t.root, "root"); break;
        case Flavor::PlainLenient: ok = c.check_lenient_node(*t.root, "root"); break;
    }
    if (ok) return {};
    return c.failure;
}

// ── History stripping ───────────────────────────────────────────────────────

namespace {

Rule plain_counterpart(Rule r) {
    switch (r) {
        case Rule::ImpR1:
        case Rule::ImpR2: return Rule::ImpR;
        case Rule::AndL1:
        case Rule::AndL2: return Rule::AndL;
        case Rule::N1:
        case Rule::N2:
        case Rule::N3:
        case Rule::N4: return Rule::N;
        case Rule::Copc1:
        case Rule::Copc2: return Rule::Copc;
        default: return r;
    }
}

ProofPtr strip_node(const ProofNode& n) {
    std::vector<ProofPtr> kids;
    kids.reserve(n.children.size());
    for (const auto& c : n.children) kids.push_back(strip_node(*c));
    return make_proof_node(plain_counterpart(n.rule), n.principal, {}, n.context, n.goal,
                           std::move(kids));
}

}  // namespace

ProofTree strip_history(const ProofTree& t, Logic logic) {
    if (t.flavor != Flavor::Hist)
        throw CheckError({false, "root", "strip_history expects a hist proof"});
    CheckResult r = check(t, logic);
    if (!r.ok) throw CheckError(r);
    return ProofTree{Flavor::PlainLenient, strip_node(*t.root)};
}

// ── JSON serialization ──────────────────────────────────────────────────────

namespace {

using nlohmann::json;

json context_to_json(const Context& ctx) {
    json a = json::array();
    for (const auto& f : ctx) a.push_back(to_string(f));
    return a;
}

json node_to_json(const ProofNode& n, Flavor flavor) {
    json j;
    j["rule"] = std::string(rule_name(n.rule));
    if (n.principal) j["principal"] = to_string(n.principal);
    json seq;
    if (flavor == Flavor::Hist) seq["history"] = context_to_json(n.history);
    seq["context"] = context_to_json(n.context);
    seq["goal"] = to_string(n.goal);
    j["sequent"] = std::move(seq);
    json kids = json::array();
    for (const auto& c : n.children) kids.push_back(node_to_json(*c, flavor));
    j["children"] = std::move(kids);
    return j;
}

Context context_from_json(const json& a, bool as_set) {
    if (!a.is_array()) throw ProofFormatError("context must be an array");
    std::vector<FormulaPtr> fs;
    for (const auto& e : a) {
        if (!e.is_string()) throw ProofFormatError("context entry must be a string");
        try {
            fs.push_back(parse_formula(e.get<std::string>()));
        } catch (const ParseError& err) {
            throw ProofFormatError("bad formula '" + e.get<std::string>() + "': " + err.what());
        }
    }
    return as_set ? make_set(std::move(fs)) : make_context(std::move(fs));
}

ProofPtr node_from_json(const json& j, Flavor flavor) {
    if (!j.is_object()) throw ProofFormatError("proof node must be an object");
    if (!j.contains("rule") || !j["rule"].is_string())
        throw ProofFormatError("proof node needs a 'rule' string");
    auto rule = parse_rule(j["rule"].get<std::string>());
    if (!rule) throw ProofFormatError("unknown rule id '" + j["rule"].get<std::string>() + "'");
    bool flavor_ok = flavor == Flavor::Hist ? is_hist_rule(*rule) : is_plain_rule(*rule);
    if (!flavor_ok)
        throw ProofFormatError("rule '" + j["rule"].get<std::string>() +
                               "' does not belong to flavor " + to_string(flavor));

    FormulaPtr principal;
    if (j.contains("principal")) {
        if (!j["principal"].is_string()) throw ProofFormatError("'principal' must be a string");
        try {
            principal = parse_formula(j["principal"].get<std::string>());
        } catch (const ParseError& err) {
            throw ProofFormatError(std::string("bad principal formula: ") + err.what());
        }
    }

    if (!j.contains("sequent") || !j["sequent"].is_object())
        throw ProofFormatError("proof node needs a 'sequent' object");
    const json& seq = j["sequent"];
    if (!seq.contains("context")) throw ProofFormatError("sequent needs a 'context'");
    if (!seq.contains("goal") || !seq["goal"].is_string())
        throw ProofFormatError("sequent needs a 'goal' string");
    Context history;
    if (flavor == Flavor::Hist && seq.contains("history"))
        history = context_from_json(seq["history"], true);
    if (flavor != Flavor::Hist && seq.contains("history"))
        throw ProofFormatError("history is only valid in hist proofs");
    Context context = context_from_json(seq["context"], flavor == Flavor::Hist);
    FormulaPtr goal;
    try {
        goal = parse_formula(seq["goal"].get<std::string>());
    } catch (const ParseError& err) {
        throw ProofFormatError(std::string("bad goal formula: ") + err.what());
    }

    std::vector<ProofPtr> kids;
    if (j.contains("children")) {
        if (!j["children"].is_array()) throw ProofFormatError("'children' must be an array");
        for (const auto& c : j["children"]) kids.push_back(node_from_json(c, flavor));
    }
    return make_proof_node(*rule, std::move(principal), std::move(history), std::move(context),
                           std::move(goal), std::move(kids));
}

}  // namespace

std::string serialize(const ProofTree& t) {
    json j;
    j["flavor"] = to_string(t.flavor);
    j["root"] = node_to_json(*t.root, t.flavor);
    return j.dump();
}

ProofTree deserialize(std::string_view bytes) {
    json j;
    try {
        j = json::parse(bytes);
    } catch (const json::exception& e) {
        throw ProofFormatError(std::string("malformed proof JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("flavor") || !j["flavor"].is_string() ||
        !j.contains("root"))
        throw ProofFormatError("proof JSON needs 'flavor' and 'root'");
    std::string fl = j["flavor"].get<std::string>();
    Flavor flavor;
    if (fl == "plain") flavor = Flavor::Plain;
    else if (fl == "hist") flavor = Flavor::Hist;
    else if (fl == "plain_lenient") flavor = Flavor::PlainLenient;
    else throw ProofFormatError("unknown flavor '" + fl + "'");
    return ProofTree{flavor, node_from_json(j["root"], flavor)};
}

}  // namespace subneg
