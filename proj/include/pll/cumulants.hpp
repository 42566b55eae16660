#pragma once

#include <array>

#include "pll/logprob.hpp"
#include "pll/model.hpp"

namespace pll {

/// Cumulants kappa_1..kappa_7 of a distribution. Orders above max_order are
/// unavailable and reading them throws; they are never silently zero.
struct CumulantSet {
  std::array<double, 7> values{};  // values[i] holds kappa_{i+1}
  int max_order = 0;               // 1..7

  double kappa(int order) const;  // throws std::out_of_range past max_order
};

/// Time derivatives of the first three cumulants of the unconditioned
/// process, evaluated at a given cumulant vector.
struct OdeRhs {
  double A = 0.0;  // d kappa_1 / dt
  double B = 0.0;  // d kappa_2 / dt
  double C = 0.0;  // d kappa_3 / dt
};

/// Mean plus central moments up to order max_order (compensated summation),
/// combined into cumulants:
///   k4 = m4 - 3 m2^2, k5 = m5 - 10 m3 m2,
///   k6 = m6 - 15 m4 m2 - 10 m3^2 + 30 m2^3,
///   k7 = m7 - 21 m5 m2 - 35 m4 m3 + 210 m3 m2^2.
CumulantSet cumulants_of(const ProbVector& dist, int max_order = 7);

/// Published cumulant-derivative polynomials, transcribed once per exponent.
/// Defined for integer s in {1,2,3,4} only (throws UnsupportedS otherwise);
/// requires k.max_order >= s + 3.
OdeRhs ode_rhs(const ModelParams& p, const CumulantSet& k);

}  // namespace pll
