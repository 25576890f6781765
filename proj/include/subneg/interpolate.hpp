// ============================================================================
// interpolate.hpp — Craig interpolants from cut-free proofs
// ============================================================================
//
// Maehara splitting: every context formula of a proved sequent is assigned
// to the gamma or delta part (the goal always lives on the delta side), and
// the proof is traversed computing a formula sigma with
//
//   gamma => sigma        delta, sigma => goal
//
// and language(sigma) inside the common language (possibly just T and
// negations of it).  The left premises of imp_l, (n), (nef) and (copc) with
// a gamma-side principal are interpolated with the two sides exchanged.
//
// Correctness is enforced by re-proving: interpolate() decides the merged
// sequent, extracts, then verifies both defining sequents and the language
// inclusion before returning.  A verification failure is an internal error,
// never a user error.
// ============================================================================

#pragma once

#include <optional>
#include <stdexcept>

#include "subneg/hist.hpp"
#include "subneg/proof.hpp"
#include "subneg/sequent.hpp"

namespace subneg {

struct SplitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InterpolationResult {
    FormulaPtr interpolant;
    Decision left_check;   // gamma => sigma
    Decision right_check;  // delta, sigma => goal
};

// t must be a plain or plain_lenient proof of the merged split sequent.
// Throws SplitError when the split does not cover the proof's root.
FormulaPtr extract_interpolant(const ProofTree& t, const SplitSequent& split);

// std::nullopt when the merged sequent is unprovable; throws std::logic_error
// if the extracted interpolant fails any of the three checks.
std::optional<InterpolationResult> interpolate(const SplitSequent& split, Logic logic);

}  // namespace subneg
