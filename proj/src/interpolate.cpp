#include "subneg/interpolate.hpp"

#include <unordered_map>

namespace subneg {

namespace {

// Side assignment for the formulas of one node's context; true = gamma part.
using SideMap = std::unordered_map<FormulaPtr, bool, FormulaHash, FormulaEq>;

SideMap swapped(const SideMap& m) {
    SideMap out = m;
    for (auto& kv : out) kv.second = !kv.second;
    return out;
}

// Rule-added premise formulas keep an existing assignment (the lenient
// checker may have identified them with a context occurrence); genuinely new
// formulas get the given side.
SideMap with_formula(const SideMap& m, const FormulaPtr& f, bool gamma) {
    SideMap out = m;
    out.emplace(f, gamma);
    return out;
}

constexpr bool kGamma = true;
constexpr bool kDelta = false;

// Constant folding over T keeps interpolants in the shape the case analysis
// promises (T or a negation tower over it when the common language is empty).
FormulaPtr mk_and(const FormulaPtr& a, const FormulaPtr& b) {
    if (a->kind == Kind::Top) return b;
    if (b->kind == Kind::Top) return a;
    return Formula::make_and(a, b);
}
FormulaPtr mk_or(const FormulaPtr& a, const FormulaPtr& b) {
    if (a->kind == Kind::Top || b->kind == Kind::Top) return Formula::make_top();
    return Formula::make_or(a, b);
}
FormulaPtr mk_imp(const FormulaPtr& a, const FormulaPtr& b) {
    if (a->kind == Kind::Top) return b;
    if (b->kind == Kind::Top) return Formula::make_top();
    return Formula::make_imp(a, b);
}

struct Extractor {
    bool side_of(const SideMap& sides, const FormulaPtr& f, const char* what) {
        auto it = sides.find(f);
        if (it == sides.end())
            throw SplitError(std::string("formula '") + to_string(f) + "' (" + what +
                             ") is assigned to neither part of the split");
        return it->second;
    }

    static std::size_t arity(Rule r) {
        switch (r) {
            case Rule::Ax:
            case Rule::Top: return 0;
            case Rule::AndR:
            case Rule::OrL:
            case Rule::ImpL:
            case Rule::N: return 2;
            default: return 1;
        }
    }

    static Kind goal_shape(Rule r) {
        switch (r) {
            case Rule::ImpR: return Kind::Imp;
            case Rule::AndR: return Kind::And;
            case Rule::OrR1:
            case Rule::OrR2: return Kind::Or;
            case Rule::N:
            case Rule::Nef:
            case Rule::Copc:
            case Rule::An: return Kind::Neg;
            default: return Kind::Top;  // no constraint checked here
        }
    }

    FormulaPtr extract(const ProofNode& n, const SideMap& sides) {
        bool shape_ok = n.children.size() == arity(n.rule);
        Kind gk = goal_shape(n.rule);
        if (gk != Kind::Top && n.goal->kind != gk) shape_ok = false;
        switch (n.rule) {  // rules with a context principal need one of the right shape
            case Rule::AndL: shape_ok = shape_ok && n.principal && n.principal->kind == Kind::And; break;
            case Rule::OrL: shape_ok = shape_ok && n.principal && n.principal->kind == Kind::Or; break;
            case Rule::ImpL: shape_ok = shape_ok && n.principal && n.principal->kind == Kind::Imp; break;
            case Rule::N:
            case Rule::Nef:
            case Rule::Copc: shape_ok = shape_ok && n.principal && n.principal->kind == Kind::Neg; break;
            default: break;
        }
        if (!shape_ok)
            throw SplitError("malformed proof node for rule '" +
                             std::string(rule_name(n.rule)) + "'");
        switch (n.rule) {
            case Rule::Top: return Formula::make_top();
            case Rule::Ax:
                return side_of(sides, n.goal, "axiom atom") == kGamma ? n.goal
                                                                      : Formula::make_top();
            case Rule::ImpR:
                return extract(*n.children[0], with_formula(sides, n.goal->lhs, kDelta));
            case Rule::AndR:
                return mk_and(extract(*n.children[0], sides), extract(*n.children[1], sides));
            case Rule::OrR1:
            case Rule::OrR2: return extract(*n.children[0], sides);
            case Rule::AndL: {
                bool s = side_of(sides, n.principal, "principal");
                SideMap m = with_formula(with_formula(sides, n.principal->lhs, s),
                                         n.principal->rhs, s);
                return extract(*n.children[0], m);
            }
            case Rule::OrL: {
                bool s = side_of(sides, n.principal, "principal");
                FormulaPtr s1 =
                    extract(*n.children[0], with_formula(sides, n.principal->lhs, s));
                FormulaPtr s2 =
                    extract(*n.children[1], with_formula(sides, n.principal->rhs, s));
                return s == kGamma ? mk_or(s1, s2) : mk_and(s1, s2);
            }
            case Rule::ImpL: {
                bool s = side_of(sides, n.principal, "principal");
                if (s == kDelta) {
                    FormulaPtr s1 = extract(*n.children[0], sides);
                    FormulaPtr s2 =
                        extract(*n.children[1], with_formula(sides, n.principal->rhs, kDelta));
                    return mk_and(s1, s2);
                }
                FormulaPtr s1 = extract(*n.children[0], swapped(sides));
                FormulaPtr s2 =
                    extract(*n.children[1], with_formula(sides, n.principal->rhs, kGamma));
                return mk_imp(s1, s2);
            }
            case Rule::N: {
                bool s = side_of(sides, n.principal, "principal");
                const FormulaPtr& alpha = n.principal->lhs;
                const FormulaPtr& beta = n.goal->lhs;
                if (s == kDelta) {
                    FormulaPtr s1 =
                        extract(*n.children[1], with_formula(sides, alpha, kDelta));
                    FormulaPtr s2 = extract(*n.children[0], with_formula(sides, beta, kDelta));
                    return mk_and(s1, s2);
                }
                FormulaPtr s1 = extract(*n.children[1], with_formula(sides, alpha, kGamma));
                FormulaPtr s2 =
                    extract(*n.children[0], swapped(with_formula(sides, beta, kDelta)));
                return mk_imp(mk_imp(s1, s2),
                              mk_and(mk_imp(s2, s1), Formula::make_neg(s1)));
            }
            case Rule::Nef: {
                bool s = side_of(sides, n.principal, "principal");
                if (s == kDelta) return extract(*n.children[0], sides);
                FormulaPtr s1 = extract(*n.children[0], swapped(sides));
                return mk_imp(s1, Formula::make_neg(s1));
            }
            case Rule::Copc: {
                bool s = side_of(sides, n.principal, "principal");
                const FormulaPtr& beta = n.goal->lhs;
                if (s == kDelta)
                    return extract(*n.children[0], with_formula(sides, beta, kDelta));
                FormulaPtr s1 =
                    extract(*n.children[0], swapped(with_formula(sides, beta, kDelta)));
                return Formula::make_neg(s1);
            }
            case Rule::An:
                return extract(*n.children[0], with_formula(sides, n.goal->lhs, kDelta));
            default:
                throw SplitError("proof contains a rule the splitting does not handle: " +
                                 std::string(rule_name(n.rule)));
        }
    }
};

}  // namespace

FormulaPtr extract_interpolant(const ProofTree& t, const SplitSequent& split) {
    if (t.flavor == Flavor::Hist)
        throw SplitError("interpolation runs on plain proofs; strip the history first");
    const ProofNode& root = *t.root;
    if (!equal(root.goal, split.goal))
        throw SplitError("proof goal does not match the split sequent");

    Context merged_set = make_set(ctx_union(split.gamma, split.delta));
    Context root_set = make_set(root.context);
    if (!ctx_equal(merged_set, root_set))
        throw SplitError("proof context does not match the split sequent");

    SideMap sides;
    for (const FormulaPtr& f : root_set) {
        bool in_gamma = ctx_contains(split.gamma, f);
        bool in_delta = ctx_contains(split.delta, f);
        if (!in_gamma && !in_delta)
            throw SplitError("formula '" + to_string(f) +
                             "' is assigned to neither part of the split");
        sides.emplace(f, in_gamma ? kGamma : kDelta);  // both parts: gamma wins
    }

    Extractor ex;
    return ex.extract(root, sides);
}

std::optional<InterpolationResult> interpolate(const SplitSequent& split, Logic logic) {
    Decision d = decide(merge(split), logic);
    if (!d.provable()) return std::nullopt;

    ProofTree lenient = strip_history(*d.proof, logic);
    FormulaPtr sigma = extract_interpolant(lenient, split);

    std::vector<FormulaPtr> sv{sigma};
    std::set<std::string> sigma_lang = language(sv);
    std::set<std::string> common = common_language(split);
    for (const std::string& atom : sigma_lang)
        if (!common.count(atom))
            throw std::logic_error("interpolant '" + to_string(sigma) +
                                   "' escapes the common language of " + to_string(split));

    Decision left = decide(Sequent{split.gamma, sigma}, logic);
    Decision right = decide(Sequent{ctx_add(split.delta, sigma), split.goal}, logic);
    if (!left.provable() || !right.provable())
        throw std::logic_error("interpolant '" + to_string(sigma) +
                               "' failed verification for " + to_string(split));

    InterpolationResult out;
    out.interpolant = std::move(sigma);
    out.left_check = std::move(left);
    out.right_check = std::move(right);
    return out;
}

}  // namespace subneg
