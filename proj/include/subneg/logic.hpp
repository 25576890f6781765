// ============================================================================
// logic.hpp — the four logics and the rule identifiers of both calculi
// ============================================================================
//
// Rule sets, keeping the positive rules fixed:
//   N     positive rules + (n)
//   NeF   N's rules + (nef)
//   CoPC  positive rules + (copc)            — (n) replaced by (copc)
//   MPC   CoPC's rules + (an)
//
// The terminating calculus splits some rules into side-condition variants:
// imp_r1/imp_r2, and_l1/and_l2, n1..n4, copc1/copc2.
// ============================================================================

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace subneg {

enum class Logic : std::uint8_t { N, NeF, CoPC, MPC };

std::string to_string(Logic l);
std::optional<Logic> parse_logic(std::string_view name);  // "n" "nef" "copc" "mpc"

enum class Rule : std::uint8_t {
    // plain calculus
    Ax,
    Top,
    ImpR,
    ImpL,
    AndR,
    AndL,
    OrR1,
    OrR2,
    OrL,
    N,
    Nef,
    Copc,
    An,
    // history-calculus variants
    ImpR1,
    ImpR2,
    AndL1,
    AndL2,
    N1,
    N2,
    N3,
    N4,
    Copc1,
    Copc2,
};

std::string_view rule_name(Rule r);
std::optional<Rule> parse_rule(std::string_view name);

bool is_plain_rule(Rule r);
bool is_hist_rule(Rule r);

// Whether the negation rule r belongs to the logic's rule set (positive rules
// belong to every logic).
bool rule_in_logic(Rule r, Logic l);

}  // namespace subneg
