// ============================================================================
// algebra.hpp — finite algebras of the negation varieties
// ============================================================================
//
// A FiniteAlgebra is a finite distributive lattice with greatest element,
// its relative pseudocomplement (the residual of meet), and a unary negation
// table satisfying the defining equations of a variety:
//
//   N     (p <-> q) -> (~p <-> ~q) = 1
//   NeF   N's equation and (p & ~p) -> ~q = 1
//   CoPC  (p -> q) -> (~q -> ~p) = 1
//   MPC   CoPC's equation and (p -> ~p) -> ~p = 1
//
// Enumeration: all partial orders on <= max_size elements carrying a top
// (generated with the labels in topological order, which reaches every
// isomorphism class), filtered to distributive lattices, deduplicated by a
// canonical relabeling, then every negation table filtered by brute force
// over all element pairs.  The oracle refutes; exhausting it proves nothing.
// ============================================================================

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "subneg/formula.hpp"
#include "subneg/logic.hpp"
#include "subneg/sequent.hpp"

namespace subneg {

struct FiniteAlgebra {
    int size = 0;
    int top = 0;
    std::vector<std::uint8_t> leq;   // size*size, row-major: leq[a*size+b] = (a <= b)
    std::vector<std::uint8_t> meet;  // size*size
    std::vector<std::uint8_t> join;  // size*size
    std::vector<std::uint8_t> rpc;   // size*size, largest c with a & c <= b
    std::vector<std::uint8_t> neg;   // size

    bool le(int a, int b) const { return leq[a * size + b] != 0; }
    int mt(int a, int b) const { return meet[a * size + b]; }
    int jn(int a, int b) const { return join[a * size + b]; }
    int imp(int a, int b) const { return rpc[a * size + b]; }
    int ng(int a) const { return neg[a]; }
};

// Calls visit for each algebra; stop by returning false.  Sizes run from 1
// up to max_size; isomorphic duplicate lattices are dropped, duplicate
// (lattice, neg) combinations under isomorphism are permitted.
void enumerate_algebras(int max_size, Logic logic,
                        const std::function<bool(const FiniteAlgebra&)>& visit);

std::vector<FiniteAlgebra> enumerate_algebras(int max_size, Logic logic);

using Valuation = std::map<std::string, int>;

// Homomorphic evaluation: T to top, -> to rpc, ~ to the neg table.
// Throws std::invalid_argument when an atom has no valuation entry.
int eval(const FormulaPtr& f, const FiniteAlgebra& a, const Valuation& v);

struct Countermodel {
    FiniteAlgebra algebra;
    Valuation valuation;
};

// First (algebra, valuation) with eval(/\ctx -> goal) != top, if any.
// std::nullopt is not a provability certificate.
std::optional<Countermodel> find_countermodel(const Sequent& s, Logic logic, int max_size);
std::optional<Countermodel> find_countermodel(const Sequent& s,
                                              const std::vector<FiniteAlgebra>& algebras);

std::string to_string(const FiniteAlgebra& a);

}  // namespace subneg
