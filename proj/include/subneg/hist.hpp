// ============================================================================
// hist.hpp — the terminating history-calculus decision procedure
// ============================================================================
//
// Sequents are H | Γ => φ with set context and history.  Left rules fire
// only when the goal is an atom, a negation or a disjunction.  Reading the
// rules bottom-up the context never shrinks; the history is reset exactly
// when the context properly grows, carried otherwise, and a rule that would
// re-attempt a goal already in the history is inapplicable — that is the
// only loop cut.
//
// Termination measure, compared lexicographically:
//   (k - n, k - m, w)   k = |subformulas of Γ ∪ {φ}|, n = |Γ|, m = |H|,
//                       w = weight(φ)
// Every backward step strictly decreases it; decide() verifies the decrease
// at each expansion and throws MeasureViolation otherwise.
// ============================================================================

#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "subneg/logic.hpp"
#include "subneg/proof.hpp"
#include "subneg/sequent.hpp"

namespace subneg {

struct HistRuleInstance {
    Rule rule;
    FormulaPtr principal;  // null for ax/top, right rules and an
    std::vector<HistSequent> premises;
};

std::vector<HistRuleInstance> hist_rule_instances(const HistSequent& s, Logic logic);

struct Measure {
    long first;   // k - n
    long second;  // k - m
    long third;   // w
    auto operator<=>(const Measure&) const = default;
};

Measure measure(const HistSequent& s);

struct MeasureViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    int max_branch_length = 0;       // sequents along the deepest explored branch
    int max_sequent_size = 0;        // |H| + |Γ| + 1 over all visited sequents
    // smallest measure component seen; stays >= 0 on reachable search states
    long min_measure_component = std::numeric_limits<long>::max();
};

struct Decision {
    std::optional<ProofTree> proof;  // engaged iff provable
    SearchStats stats;
    bool provable() const { return proof.has_value(); }
};

// Complete backtracking search; the verdict is total and definitive.
Decision decide(const Sequent& s, Logic logic);
Decision decide(const FormulaPtr& goal, Logic logic);  // ∅ | ∅ => goal

}  // namespace subneg
