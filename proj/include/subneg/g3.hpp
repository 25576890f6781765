// ============================================================================
// g3.hpp — plain-calculus rule schemas and the fuel-bounded naive prover
// ============================================================================
//
// rule_instances enumerates every backward-applicable instance of the
// logic's rules at a multiset sequent, one instance per distinct principal
// choice; (ax) and (top) appear as zero-premise instances.
//
// naive_prove is the cross-check oracle: backward search whose fuel bounds
// the derivation height along a branch.  Zero-premise rules close a branch
// immediately; one applicable invertible rule (and_l, imp_r, and_r, or_l) is
// applied eagerly; the remaining choices (or_r1/or_r2, imp_l, n, nef, copc,
// an) are explored by backtracking.  A branch that repeats an identical
// sequent is pruned.  Exhausted means no proof was found within the fuel —
// it is not an unprovability verdict.
// ============================================================================

#pragma once

#include <optional>
#include <vector>

#include "subneg/logic.hpp"
#include "subneg/proof.hpp"
#include "subneg/sequent.hpp"

namespace subneg {

struct RuleInstance {
    Rule rule;
    FormulaPtr principal;  // null for ax/top and right rules
    std::vector<Sequent> premises;
};

std::vector<RuleInstance> rule_instances(const Sequent& s, Logic logic);

struct NaiveResult {
    std::optional<ProofTree> proof;  // engaged iff provable within fuel
    bool provable() const { return proof.has_value(); }
};

NaiveResult naive_prove(const Sequent& s, Logic logic, int fuel);

}  // namespace subneg
