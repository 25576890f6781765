// Shared helpers for the test suites: shorthand constructors, a deterministic
// random formula generator, and exhaustive enumeration of small formulas.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "subneg/formula.hpp"
#include "subneg/sequent.hpp"

namespace subneg::testutil {

inline FormulaPtr f(const std::string& text) { return parse_formula(text); }
inline Sequent seq(const std::string& text) { return parse_sequent(text); }

inline FormulaPtr random_formula(std::mt19937& rng, int depth,
                                 const std::vector<std::string>& atoms) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 5);
    switch (pick(rng)) {
        case 0: {
            std::uniform_int_distribution<std::size_t> a(0, atoms.size() - 1);
            return Formula::make_atom(atoms[a(rng)]);
        }
        case 1: return Formula::make_top();
        case 2: return Formula::make_neg(random_formula(rng, depth - 1, atoms));
        case 3:
            return Formula::make_and(random_formula(rng, depth - 1, atoms),
                                     random_formula(rng, depth - 1, atoms));
        case 4:
            return Formula::make_or(random_formula(rng, depth - 1, atoms),
                                    random_formula(rng, depth - 1, atoms));
        default:
            return Formula::make_imp(random_formula(rng, depth - 1, atoms),
                                     random_formula(rng, depth - 1, atoms));
    }
}

// All formulas of weight <= max_weight over the given leaves (atoms plus T),
// grouped by weight; index 0 unused.
inline std::vector<std::vector<FormulaPtr>> formulas_by_weight(
    int max_weight, const std::vector<std::string>& atoms) {
    std::vector<std::vector<FormulaPtr>> by_weight(max_weight + 1);
    for (const auto& a : atoms) by_weight[1].push_back(Formula::make_atom(a));
    by_weight[1].push_back(Formula::make_top());
    for (int w = 2; w <= max_weight; w++) {
        for (const auto& g : by_weight[w - 1]) by_weight[w].push_back(Formula::make_neg(g));
        for (int wl = 1; wl + 2 <= w; wl++) {
            int wr = w - wl - 1;
            for (const auto& l : by_weight[wl]) {
                for (const auto& r : by_weight[wr]) {
                    by_weight[w].push_back(Formula::make_and(l, r));
                    by_weight[w].push_back(Formula::make_or(l, r));
                    by_weight[w].push_back(Formula::make_imp(l, r));
                }
            }
        }
    }
    return by_weight;
}

inline std::vector<FormulaPtr> all_formulas(int max_weight,
                                            const std::vector<std::string>& atoms) {
    std::vector<FormulaPtr> out;
    for (auto& bucket : formulas_by_weight(max_weight, atoms))
        out.insert(out.end(), bucket.begin(), bucket.end());
    return out;
}

}  // namespace subneg::testutil
