// ============================================================================
// sequent.hpp — plain, history-annotated and split sequents
// ============================================================================
//
// A plain Sequent keeps a multiset context (duplicates preserved); a
// HistSequent keeps set contexts and a history set, because all side
// conditions of the terminating calculus are membership tests and its rules
// never duplicate.  Stored formulas are kept sorted in the canonical AST
// order, so equality and hashing are deterministic.
//
// Textual forms:   g1, g2 => f        plain sequent (bare `f` means `=> f`)
//                  g1 ; d1, d2 => f   split sequent
// ============================================================================

#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "subneg/formula.hpp"

namespace subneg {

using Context = std::vector<FormulaPtr>;  // sorted; multiset or set per use

// Multiset operations (duplicates allowed).
bool ctx_contains(const Context& ctx, const FormulaPtr& f);
Context ctx_add(const Context& ctx, const FormulaPtr& f);
Context ctx_remove_one(const Context& ctx, const FormulaPtr& f);
Context ctx_union(const Context& a, const Context& b);
Context make_context(std::vector<FormulaPtr> fs);  // sorts, keeps duplicates

// Set operations (adding a present formula is a no-op).
Context set_add(const Context& ctx, const FormulaPtr& f);
Context make_set(std::vector<FormulaPtr> fs);  // sorts, drops duplicates

std::size_t ctx_hash(const Context& ctx);
bool ctx_equal(const Context& a, const Context& b);

struct Sequent {
    Context context;  // multiset
    FormulaPtr goal;
};

struct HistSequent {
    Context history;  // set; entries are atoms, negations or disjunctions
    Context context;  // set
    FormulaPtr goal;
};

struct SplitSequent {
    Context gamma;  // multiset
    Context delta;  // multiset
    FormulaPtr goal;
};

Sequent make_sequent(std::vector<FormulaPtr> ctx, FormulaPtr goal);
HistSequent make_hist_sequent(std::vector<FormulaPtr> history, std::vector<FormulaPtr> ctx,
                              FormulaPtr goal);

bool equal(const Sequent& a, const Sequent& b);
bool equal(const HistSequent& a, const HistSequent& b);

struct SequentHash {
    std::size_t operator()(const Sequent& s) const;
};
struct SequentEq {
    bool operator()(const Sequent& a, const Sequent& b) const { return equal(a, b); }
};

std::string to_string(const Sequent& s);
std::string to_string(const HistSequent& s);
std::string to_string(const SplitSequent& s);

// `g1, g2 => f`; a bare formula is read as `=> f`.
Sequent parse_sequent(std::string_view text);
// `g1, g2 ; d1, d2 => f`; either part may be empty.
SplitSequent parse_split_sequent(std::string_view text);

Sequent merge(const SplitSequent& s);

// language(gamma) ∩ language(delta ∪ {goal})
std::set<std::string> common_language(const SplitSequent& s);

}  // namespace subneg
