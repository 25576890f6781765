// ============================================================================
// transforms.hpp — logic translations and negation-tower reduction
// ============================================================================

#pragma once

#include "subneg/formula.hpp"

namespace subneg {

// Translation of the minimal-logic negation into the weaker systems: atoms
// and T are fixed, binary connectives map homomorphically, and ~f maps to
// (f~ -> ~f~).
FormulaPtr tilde(const FormulaPtr& f);

// Rewrites every maximal negation tower of height m over a non-negation body
// to height m (m <= 3), 2 (m >= 4 even) or 3 (m >= 5 odd), recursing into
// the body.  Odd towers never drop below 3: the odd collapse to a single
// negation is a one-way implication.  Sound for logics with the
// contraposition rule (copc, mpc) only.
FormulaPtr reduce_negations(const FormulaPtr& f);

}  // namespace subneg
