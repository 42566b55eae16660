#pragma once

#include <vector>

namespace pll {

/// Five-parameter formulation of the power-law logistic birth-death process.
/// All downstream machinery works in this parametrization; N is the ceiling
/// state and the large parameter of every asymptotic expansion.
struct ModelParams {
  int N = 0;          // maximum population size, N >= 2
  double R0 = 0.0;    // dimensionless threshold parameter, > 0
  double alpha = 0.0; // dimensionless death-rate density dependence, >= 0
  double mu = 0.0;    // per-capita death rate, 1/time, > 0
  double s = 0.0;     // power-law exponent, > 0 (non-integer allowed)

  /// Throws ValidityError unless N >= 2, R0 > 0, alpha >= 0, mu > 0, s > 0.
  void validate() const;

  /// validate() plus the R0 > 1 condition required by every asymptotic
  /// approximation; throws ValidityError otherwise.
  void require_supercritical() const;
};

/// Four-rate formulation (birth a1*n - b1*n^{s+1}, death a2*n + b2*n^{s+1})
/// together with the sum/difference combinations used by the s = 1
/// cumulant derivative functions.
struct BartlettParams {
  double a1 = 0.0;
  double a2 = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double s = 0.0;
  double a = 0.0;  // a1 - a2
  double b = 0.0;  // b1 + b2
  double c = 0.0;  // a1 + a2
  double d = 0.0;  // b1 - b2
};

/// Per-state transition rates, indexed by state n = 0..N.
/// birth[0] = birth[N] = 0 and death[0] = 0: the origin absorbs and the
/// ceiling reflects.
struct RateTable {
  int N = 0;
  std::vector<double> birth;
  std::vector<double> death;
};

/// (n/N)^s with n = 0 mapped to exact zero; evaluated via exp(s*log(n/N))
/// so non-integer s is handled uniformly.
double frac_pow(int n, int N, double s);

/// birth[n] = mu*R0*(1 - (n/N)^s)*n, death[n] = mu*(1 + alpha*(n/N)^s)*n.
RateTable rates(const ModelParams& p);

/// Exact reparametrization into the four-rate formulation.
BartlettParams to_bartlett(const ModelParams& p);

/// Inverse of to_bartlett. Throws IntegrityError unless (a1/b1)^(1/s)
/// equals N to relative tolerance 1e-9, or if b2 < 0.
ModelParams from_bartlett(const BartlettParams& q, int N);

}  // namespace pll
