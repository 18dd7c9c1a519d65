#pragma once

#include <stdexcept>
#include <string>

#include "lukadmit/formula.hpp"
#include "lukadmit/mcnaughton.hpp"
#include "lukadmit/variety.hpp"

namespace lukadmit {

class AxiomError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Target function for the one-variable axiom of V_{I,J}: value 1 exactly at
/// the multiples of 1/i (i in I) and on small plateaus around the multiples of
/// 1/j (j in J). Every bump has its edges at Stern-Brocot neighbours of its
/// centre, so each one costs at most three hats.
PLFunc design_target(const ReducedPair& pair);

/// synthesize(design_target(pair)) in `var`, checked by verify_axiomatizes.
/// Throws AxiomError if the check fails.
Formula alpha(const ReducedPair& pair, const std::string& var = "x");

/// Finite-chain spectrum is Div(I u J) and lex spectrum is Div(J).
bool verify_axiomatizes(const Formula& t, const ReducedPair& pair);

}  // namespace lukadmit
