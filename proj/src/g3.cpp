#include "subneg/g3.hpp"

#include <climits>
#include <unordered_map>

namespace subneg {

// ── Rule instances ──────────────────────────────────────────────────────────
// Output order doubles as the search order: ax/top, then the invertible
// rules (and_l, imp_r, and_r, or_l), then or_r1/or_r2, imp_l and the
// negation rules.  Principal choices run over distinct context formulas; a
// duplicate occurrence yields the same instance.

namespace {

template <typename F>
void for_each_distinct(const Context& ctx, F&& f) {
    for (std::size_t i = 0; i < ctx.size(); i++) {
        if (i > 0 && equal(ctx[i], ctx[i - 1])) continue;
        f(ctx[i]);
    }
}

}  // namespace

std::vector<RuleInstance> rule_instances(const Sequent& s, Logic logic) {
    std::vector<RuleInstance> out;
    const FormulaPtr& goal = s.goal;
    const Context& ctx = s.context;

    if (goal->kind == Kind::Top) out.push_back({Rule::Top, nullptr, {}});
    if (goal->kind == Kind::Atom && ctx_contains(ctx, goal))
        out.push_back({Rule::Ax, nullptr, {}});

    for_each_distinct(ctx, [&](const FormulaPtr& f) {
        if (f->kind != Kind::And) return;
        Context p = ctx_add(ctx_add(ctx_remove_one(ctx, f), f->lhs), f->rhs);
        out.push_back({Rule::AndL, f, {Sequent{std::move(p), goal}}});
    });

    if (goal->kind == Kind::Imp)
        out.push_back({Rule::ImpR, nullptr, {Sequent{ctx_add(ctx, goal->lhs), goal->rhs}}});

    if (goal->kind == Kind::And)
        out.push_back({Rule::AndR, nullptr, {Sequent{ctx, goal->lhs}, Sequent{ctx, goal->rhs}}});

    for_each_distinct(ctx, [&](const FormulaPtr& f) {
        if (f->kind != Kind::Or) return;
        Context base = ctx_remove_one(ctx, f);
        out.push_back({Rule::OrL, f,
                       {Sequent{ctx_add(base, f->lhs), goal}, Sequent{ctx_add(base, f->rhs), goal}}});
    });

    if (goal->kind == Kind::Or) {
        out.push_back({Rule::OrR1, nullptr, {Sequent{ctx, goal->lhs}}});
        out.push_back({Rule::OrR2, nullptr, {Sequent{ctx, goal->rhs}}});
    }

    for_each_distinct(ctx, [&](const FormulaPtr& f) {
        if (f->kind != Kind::Imp) return;
        out.push_back({Rule::ImpL, f,
                       {Sequent{ctx, f->lhs},
                        Sequent{ctx_add(ctx_remove_one(ctx, f), f->rhs), goal}}});
    });

    if (goal->kind == Kind::Neg) {
        const FormulaPtr& beta = goal->lhs;
        if (rule_in_logic(Rule::N, logic)) {
            for_each_distinct(ctx, [&](const FormulaPtr& f) {
                if (f->kind != Kind::Neg) return;
                const FormulaPtr& alpha = f->lhs;
                out.push_back({Rule::N, f,
                               {Sequent{ctx_add(ctx, beta), alpha},
                                Sequent{ctx_add(ctx, alpha), beta}}});
            });
        }
        if (rule_in_logic(Rule::Nef, logic)) {
            for_each_distinct(ctx, [&](const FormulaPtr& f) {
                if (f->kind != Kind::Neg) return;
                out.push_back({Rule::Nef, f, {Sequent{ctx, f->lhs}}});
            });
        }
        if (rule_in_logic(Rule::Copc, logic)) {
            for_each_distinct(ctx, [&](const FormulaPtr& f) {
                if (f->kind != Kind::Neg) return;
                out.push_back({Rule::Copc, f, {Sequent{ctx_add(ctx, beta), f->lhs}}});
            });
        }
        if (rule_in_logic(Rule::An, logic))
            out.push_back({Rule::An, nullptr, {Sequent{ctx_add(ctx, beta), goal}}});
    }

    return out;
}

// ── Naive backward search ───────────────────────────────────────────────────
// Fuel counts backward steps along a branch.  Per top-level call the search
// memoizes successes (with the found height) and failures; a failure is
// recorded only when it did not depend on loop-pruning against a sequent
// outside the current subtree, since such prunes are path-dependent.

namespace {

bool invertible_rule(Rule r) {
    return r == Rule::AndL || r == Rule::ImpR || r == Rule::AndR || r == Rule::OrL;
}

class NaiveSearcher {
public:
    explicit NaiveSearcher(Logic logic) : logic_(logic) {}

    ProofPtr run(const Sequent& root, int fuel) {
        int prune_min = INT_MAX;
        return search(root, fuel, prune_min);
    }

private:
    struct Entry {
        int proved_height = INT_MAX;
        ProofPtr proof;
        int failed_fuel = -1;
    };

    Logic logic_;
    std::unordered_map<Sequent, Entry, SequentHash, SequentEq> memo_;
    std::vector<std::pair<std::size_t, Sequent>> path_;

    ProofPtr search(const Sequent& s, int fuel, int& prune_min) {
        if (fuel <= 0) return nullptr;
        std::size_t h = SequentHash{}(s);
        for (std::size_t i = 0; i < path_.size(); i++) {
            if (path_[i].first == h && equal(path_[i].second, s)) {
                prune_min = std::min(prune_min, static_cast<int>(i));
                return nullptr;
            }
        }
        auto it = memo_.find(s);
        if (it != memo_.end()) {
            if (it->second.proved_height <= fuel) return it->second.proof;
            if (it->second.failed_fuel >= fuel) return nullptr;
        }

        int my_depth = static_cast<int>(path_.size());
        path_.emplace_back(h, s);
        int sub_prune = INT_MAX;
        ProofPtr result = expand(s, fuel, sub_prune);
        path_.pop_back();
        prune_min = std::min(prune_min, sub_prune);

        Entry& e = memo_[s];
        if (result) {
            int ht = proof_height(*result);
            if (ht < e.proved_height) {
                e.proved_height = ht;
                e.proof = result;
            }
        } else if (sub_prune >= my_depth) {
            e.failed_fuel = std::max(e.failed_fuel, fuel);
        }
        return result;
    }

    ProofPtr expand(const Sequent& s, int fuel, int& prune_min) {
        std::vector<RuleInstance> instances = rule_instances(s, logic_);
        for (const RuleInstance& inst : instances)
            if (inst.premises.empty()) return close(s, inst, {});
        for (const RuleInstance& inst : instances) {
            if (!invertible_rule(inst.rule)) continue;
            auto kids = prove_premises(inst, fuel, prune_min);
            return kids ? close(s, inst, std::move(*kids)) : nullptr;  // committed
        }
        for (const RuleInstance& inst : instances) {
            auto kids = prove_premises(inst, fuel, prune_min);
            if (kids) return close(s, inst, std::move(*kids));
        }
        return nullptr;
    }

    std::optional<std::vector<ProofPtr>> prove_premises(const RuleInstance& inst, int fuel,
                                                        int& prune_min) {
        std::vector<ProofPtr> kids;
        kids.reserve(inst.premises.size());
        for (const Sequent& p : inst.premises) {
            ProofPtr k = search(p, fuel - 1, prune_min);
            if (!k) return std::nullopt;
            kids.push_back(std::move(k));
        }
        return kids;
    }

    static ProofPtr close(const Sequent& s, const RuleInstance& inst,
                          std::vector<ProofPtr> kids) {
        return make_proof_node(inst.rule, inst.principal, {}, s.context, s.goal,
                               std::move(kids));
    }
};

}  // namespace

NaiveResult naive_prove(const Sequent& s, Logic logic, int fuel) {
    NaiveSearcher searcher(logic);
    ProofPtr p = searcher.run(s, fuel);
    if (!p) return {};
    ProofTree tree{Flavor::Plain, std::move(p)};
    CheckResult c = check(tree, logic);
    if (!c.ok)
        throw std::logic_error("naive_prove produced an invalid proof at " + c.path + ": " +
                               c.reason);
    return {std::move(tree)};
}

}  // namespace subneg
