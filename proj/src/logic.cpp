#include "subneg/logic.hpp"

#include <array>

namespace subneg {

std::string to_string(Logic l) {
    switch (l) {
        case Logic::N: return "n";
        case Logic::NeF: return "nef";
        case Logic::CoPC: return "copc";
        case Logic::MPC: return "mpc";
    }
    return "?";
}

std::optional<Logic> parse_logic(std::string_view name) {
    if (name == "n" || name == "N") return Logic::N;
    if (name == "nef" || name == "NeF" || name == "NEF") return Logic::NeF;
    if (name == "copc" || name == "CoPC" || name == "COPC") return Logic::CoPC;
    if (name == "mpc" || name == "MPC") return Logic::MPC;
    return std::nullopt;
}

namespace {

struct RuleName {
    Rule rule;
    std::string_view name;
};

constexpr std::array<RuleName, 23> kRuleNames = {{
    {Rule::Ax, "ax"},       {Rule::Top, "top"},     {Rule::ImpR, "imp_r"},
    {Rule::ImpL, "imp_l"},  {Rule::AndR, "and_r"},  {Rule::AndL, "and_l"},
    {Rule::OrR1, "or_r1"},  {Rule::OrR2, "or_r2"},  {Rule::OrL, "or_l"},
    {Rule::N, "n"},         {Rule::Nef, "nef"},     {Rule::Copc, "copc"},
    {Rule::An, "an"},       {Rule::ImpR1, "imp_r1"}, {Rule::ImpR2, "imp_r2"},
    {Rule::AndL1, "and_l1"}, {Rule::AndL2, "and_l2"}, {Rule::N1, "n1"},
    {Rule::N2, "n2"},       {Rule::N3, "n3"},       {Rule::N4, "n4"},
    {Rule::Copc1, "copc1"}, {Rule::Copc2, "copc2"},
}};

}  // namespace

std::string_view rule_name(Rule r) {
    for (const auto& rn : kRuleNames)
        if (rn.rule == r) return rn.name;
    return "?";
}

std::optional<Rule> parse_rule(std::string_view name) {
    for (const auto& rn : kRuleNames)
        if (rn.name == name) return rn.rule;
    return std::nullopt;
}

bool is_plain_rule(Rule r) {
    switch (r) {
        case Rule::Ax:
        case Rule::Top:
        case Rule::ImpR:
        case Rule::ImpL:
        case Rule::AndR:
        case Rule::AndL:
        case Rule::OrR1:
        case Rule::OrR2:
        case Rule::OrL:
        case Rule::N:
        case Rule::Nef:
        case Rule::Copc:
        case Rule::An: return true;
        default: return false;
    }
}

bool is_hist_rule(Rule r) {
    switch (r) {
        case Rule::Ax:
        case Rule::Top:
        case Rule::ImpR1:
        case Rule::ImpR2:
        case Rule::ImpL:
        case Rule::AndR:
        case Rule::AndL1:
        case Rule::AndL2:
        case Rule::OrR1:
        case Rule::OrR2:
        case Rule::OrL:
        case Rule::N1:
        case Rule::N2:
        case Rule::N3:
        case Rule::N4:
        case Rule::Nef:
        case Rule::Copc1:
        case Rule::Copc2:
        case Rule::An: return true;
        default: return false;
    }
}

bool rule_in_logic(Rule r, Logic l) {
    switch (r) {
        case Rule::N:
        case Rule::N1:
        case Rule::N2:
        case Rule::N3:
        case Rule::N4: return l == Logic::N || l == Logic::NeF;
        case Rule::Nef: return l == Logic::NeF;
        case Rule::Copc:
        case Rule::Copc1:
        case Rule::Copc2: return l == Logic::CoPC || l == Logic::MPC;
        case Rule::An: return l == Logic::MPC;
        default: return true;  // positive rules
    }
}

}  // namespace subneg
