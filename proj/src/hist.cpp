#include "subneg/hist.hpp"

#include <algorithm>

namespace subneg {

// ── Rule instances ──────────────────────────────────────────────────────────
// All membership side conditions are evaluated on the full set context; a
// rule's principal is never equal to the formulas its side conditions test
// (those are proper subformulas), so "β ∉ Γ" in the schema and "β ∉ context"
// coincide.  Left rules fire only when the goal is an atom, a negation or a
// disjunction.

namespace {

bool left_goal_ok(const FormulaPtr& goal) {
    return is_atom(goal) || is_negation(goal) || is_disjunction(goal);
}

template <typename F>
void for_each_ctx(const Context& ctx, F&& f) {
    for (const FormulaPtr& g : ctx) f(g);  // set context: already distinct
}

}  // namespace

std::vector<HistRuleInstance> hist_rule_instances(const HistSequent& s, Logic logic) {
    std::vector<HistRuleInstance> out;
    const FormulaPtr& goal = s.goal;
    const Context& ctx = s.context;
    const Context& hist = s.history;
    const Context empty;

    if (goal->kind == Kind::Top) out.push_back({Rule::Top, nullptr, {}});
    if (goal->kind == Kind::Atom && ctx_contains(ctx, goal))
        out.push_back({Rule::Ax, nullptr, {}});

    if (left_goal_ok(goal)) {
        for_each_ctx(ctx, [&](const FormulaPtr& f) {
            if (f->kind != Kind::And) return;
            if (!ctx_contains(ctx, f->lhs))
                out.push_back({Rule::AndL1, f,
                               {HistSequent{empty, set_add(ctx, f->lhs), goal}}});
            if (!ctx_contains(ctx, f->rhs))
                out.push_back({Rule::AndL2, f,
                               {HistSequent{empty, set_add(ctx, f->rhs), goal}}});
        });
    }

    if (goal->kind == Kind::Imp) {
        if (!ctx_contains(ctx, goal->lhs))
            out.push_back({Rule::ImpR1, nullptr,
                           {HistSequent{empty, set_add(ctx, goal->lhs), goal->rhs}}});
        else
            out.push_back({Rule::ImpR2, nullptr, {HistSequent{hist, ctx, goal->rhs}}});
    }

    if (goal->kind == Kind::And)
        out.push_back({Rule::AndR, nullptr,
                       {HistSequent{hist, ctx, goal->lhs}, HistSequent{hist, ctx, goal->rhs}}});

    if (left_goal_ok(goal)) {
        for_each_ctx(ctx, [&](const FormulaPtr& f) {
            if (f->kind != Kind::Or) return;
            if (ctx_contains(ctx, f->lhs) || ctx_contains(ctx, f->rhs)) return;
            out.push_back({Rule::OrL, f,
                           {HistSequent{empty, set_add(ctx, f->lhs), goal},
                            HistSequent{empty, set_add(ctx, f->rhs), goal}}});
        });
    }

    if (goal->kind == Kind::Or) {
        out.push_back({Rule::OrR1, nullptr, {HistSequent{hist, ctx, goal->lhs}}});
        out.push_back({Rule::OrR2, nullptr, {HistSequent{hist, ctx, goal->rhs}}});
    }

    if (left_goal_ok(goal)) {
        for_each_ctx(ctx, [&](const FormulaPtr& f) {
            if (f->kind != Kind::Imp) return;
            if (ctx_contains(hist, goal) || ctx_contains(ctx, f->rhs)) return;
            out.push_back({Rule::ImpL, f,
                           {HistSequent{set_add(hist, goal), ctx, f->lhs},
                            HistSequent{empty, set_add(ctx, f->rhs), goal}}});
        });
    }

    if (goal->kind == Kind::Neg) {
        const FormulaPtr& beta = goal->lhs;
        bool beta_in = ctx_contains(ctx, beta);
        bool goal_in_hist = ctx_contains(hist, goal);

        if (rule_in_logic(Rule::N1, logic)) {
            for_each_ctx(ctx, [&](const FormulaPtr& f) {
                if (f->kind != Kind::Neg) return;
                const FormulaPtr& alpha = f->lhs;
                bool alpha_in = ctx_contains(ctx, alpha);
                if (!beta_in && !alpha_in) {
                    out.push_back({Rule::N1, f,
                                   {HistSequent{empty, set_add(ctx, beta), alpha},
                                    HistSequent{empty, set_add(ctx, alpha), beta}}});
                } else if (!beta_in && alpha_in) {
                    out.push_back({Rule::N2, f,
                                   {HistSequent{empty, set_add(ctx, beta), alpha},
                                    HistSequent{hist, ctx, beta}}});
                } else if (beta_in && !alpha_in && !goal_in_hist) {
                    out.push_back({Rule::N3, f,
                                   {HistSequent{set_add(hist, goal), ctx, alpha},
                                    HistSequent{empty, set_add(ctx, alpha), beta}}});
                } else if (beta_in && alpha_in && !goal_in_hist) {
                    out.push_back({Rule::N4, f,
                                   {HistSequent{set_add(hist, goal), ctx, alpha},
                                    HistSequent{hist, ctx, beta}}});
                }
            });
        }
        if (rule_in_logic(Rule::Nef, logic) && !goal_in_hist) {
            for_each_ctx(ctx, [&](const FormulaPtr& f) {
                if (f->kind != Kind::Neg) return;
                out.push_back({Rule::Nef, f, {HistSequent{set_add(hist, goal), ctx, f->lhs}}});
            });
        }
        if (rule_in_logic(Rule::Copc1, logic)) {
            for_each_ctx(ctx, [&](const FormulaPtr& f) {
                if (f->kind != Kind::Neg) return;
                if (!beta_in) {
                    out.push_back({Rule::Copc1, f,
                                   {HistSequent{empty, set_add(ctx, beta), f->lhs}}});
                } else if (!goal_in_hist) {
                    out.push_back({Rule::Copc2, f,
                                   {HistSequent{set_add(hist, goal), ctx, f->lhs}}});
                }
            });
        }
        if (rule_in_logic(Rule::An, logic) && !beta_in)
            out.push_back({Rule::An, nullptr,
                           {HistSequent{empty, set_add(ctx, beta), goal}}});
    }

    return out;
}

// ── Termination measure ─────────────────────────────────────────────────────

Measure measure(const HistSequent& s) {
    std::vector<FormulaPtr> all = s.context;
    all.push_back(s.goal);
    long k = static_cast<long>(subformula_count(all));
    return Measure{k - static_cast<long>(s.context.size()),
                   k - static_cast<long>(s.history.size()),
                   static_cast<long>(weight(s.goal))};
}

// ── Decision procedure ──────────────────────────────────────────────────────
// Goals shaped -> or ∧ admit exactly one rule; and_l1/and_l2/or_l are safe to
// commit to as well (their premises are provable whenever the conclusion is,
// via the equivalence with the plain calculus and admissible weakening).
// Everything else — or_r, imp_l, the negation rules, an — backtracks over
// every instance.

namespace {

bool hist_committed_rule(Rule r) {
    switch (r) {
        case Rule::AndL1:
        case Rule::AndL2:
        case Rule::ImpR1:
        case Rule::ImpR2:
        case Rule::AndR:
        case Rule::OrL: return true;
        default: return false;
    }
}

class HistSearcher {
public:
    explicit HistSearcher(Logic logic) : logic_(logic) {}

    ProofPtr run(const HistSequent& root) { return search(root, 1, nullptr); }
    SearchStats stats() const { return stats_; }

private:
    Logic logic_;
    SearchStats stats_;

    ProofPtr search(const HistSequent& s, int depth, const Measure* parent) {
        stats_.nodes_expanded++;
        stats_.max_branch_length = std::max(stats_.max_branch_length, depth);
        stats_.max_sequent_size =
            std::max(stats_.max_sequent_size,
                     static_cast<int>(s.history.size() + s.context.size() + 1));
        Measure m = measure(s);
        stats_.min_measure_component = std::min(
            {stats_.min_measure_component, m.first, m.second, m.third});
        if (parent && !(m < *parent))
            throw MeasureViolation("termination measure did not decrease at " + to_string(s));

        std::vector<HistRuleInstance> instances = hist_rule_instances(s, logic_);
        for (const HistRuleInstance& inst : instances)
            if (inst.premises.empty()) return close(s, inst, {});
        for (const HistRuleInstance& inst : instances) {
            if (!hist_committed_rule(inst.rule)) continue;
            auto kids = prove_premises(inst, depth, m);
            return kids ? close(s, inst, std::move(*kids)) : nullptr;
        }
        for (const HistRuleInstance& inst : instances) {
            auto kids = prove_premises(inst, depth, m);
            if (kids) return close(s, inst, std::move(*kids));
        }
        return nullptr;
    }

    std::optional<std::vector<ProofPtr>> prove_premises(const HistRuleInstance& inst, int depth,
                                                        const Measure& m) {
        std::vector<ProofPtr> kids;
        kids.reserve(inst.premises.size());
        for (const HistSequent& p : inst.premises) {
            ProofPtr k = search(p, depth + 1, &m);
            if (!k) return std::nullopt;
            kids.push_back(std::move(k));
        }
        return kids;
    }

    static ProofPtr close(const HistSequent& s, const HistRuleInstance& inst,
                          std::vector<ProofPtr> kids) {
        return make_proof_node(inst.rule, inst.principal, s.history, s.context, s.goal,
                               std::move(kids));
    }
};

}  // namespace

Decision decide(const Sequent& s, Logic logic) {
    HistSequent root{{}, make_set(s.context), s.goal};
    HistSearcher searcher(logic);
    ProofPtr p = searcher.run(root);
    Decision d;
    d.stats = searcher.stats();
    if (p) {
        ProofTree tree{Flavor::Hist, std::move(p)};
        CheckResult c = check(tree, logic);
        if (!c.ok)
            throw std::logic_error("decide produced an invalid proof at " + c.path + ": " +
                                   c.reason);
        d.proof = std::move(tree);
    }
    return d;
}

Decision decide(const FormulaPtr& goal, Logic logic) {
    return decide(Sequent{{}, goal}, logic);
}

}  // namespace subneg
