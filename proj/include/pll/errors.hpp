#pragma once

#include <stdexcept>
#include <string>

namespace pll {

/// Parameter values outside a method's domain of validity (e.g. R0 <= 1
/// for the asymptotic coefficient formulas, or malformed model parameters).
struct ValidityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Four-rate-formulation input that is internally inconsistent
/// ((a1/b1)^(1/s) does not identify an admissible ceiling state).
struct IntegrityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Rate table with a vanishing interior birth rate or non-positive death
/// rate; the ladder products are undefined.
struct DegenerateRates : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Operation only defined for specific power-law exponents.
struct UnsupportedS : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the formula's domain (e.g. alpha = 0 where alpha
/// appears in a denominator).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Iterative solver exhausted its iteration budget.
struct NoConvergence : std::runtime_error {
  NoConvergence(long iterations_, double residual_)
      : std::runtime_error("no convergence after " + std::to_string(iterations_) +
                           " iterations, residual " + std::to_string(residual_)),
        iterations(iterations_),
        residual(residual_) {}
  long iterations;
  double residual;
};

}  // namespace pll
