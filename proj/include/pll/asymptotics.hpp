#pragma once

#include <vector>

#include "pll/model.hpp"

namespace pll {

/// Rational functions of the power-law exponent that parametrize the
/// asymptotic coefficients uniformly in s:
///   h1 = 1/s, h2 = (s+1)/(2s), h3 = (s^2+6s+5)/(12s),
///   h4 = (s^2+12s+11)/(24 s^2), h5 = 1/s^2.
struct HValues {
  double h1 = 0.0;
  double h2 = 0.0;
  double h3 = 0.0;
  double h4 = 0.0;
  double h5 = 0.0;
};

/// Coefficients of the truncated large-N expansions of the first three
/// cumulants of the quasi-stationary distribution:
///   kappa1 ~ x1*N + x2 + x3/N, kappa2 ~ y1*N + y2, kappa3 ~ z1*N.
struct CoeffSet {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
  double y1 = 0.0;
  double y2 = 0.0;
  double z1 = 0.0;
};

/// Assembled truncated expansions at a concrete N, with the per-power terms
/// kept for reporting.
struct ApproxCumulants {
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double kappa3 = 0.0;
  std::vector<double> kappa1_terms;  // contributions by descending N-power
  std::vector<double> kappa2_terms;
  std::vector<double> kappa3_terms;
};

/// Structural thresholds in s for fixed (R0, alpha):
///   s2 = log((R0+alpha)/(R0-1))  -- variance leading coefficient peaks here
///   s3 = (alpha+1)*R0/(R0^2+alpha)  -- skewness sign flips here
struct SThresholds {
  double s2 = 0.0;
  double s3 = 0.0;
};

HValues h_values(double s);

/// General coefficient formulas, valid for any s > 0; requires R0 > 1
/// (throws ValidityError otherwise) and alpha >= 0.
CoeffSet coefficients(double R0, double alpha, double s);

/// Independently transcribed per-exponent closed forms for integer
/// s in 1..4; exists as a cross-check target for coefficients().
CoeffSet per_s_coefficients(double R0, double alpha, int s);

/// Truncated expansions evaluated at p.N with coefficients(p.R0, p.alpha, p.s).
ApproxCumulants approx_cumulants(const ModelParams& p);

SThresholds s_thresholds(double R0, double alpha);

/// Large-N tail asymptotic of the state-1 probability of the auxiliary
/// stationary law p^(0) for s = 1, alpha > 0, R0 > 1:
///   R0*(R0-1)*sqrt((1+alpha)*N)/(R0+alpha) * phi(sqrt(2*N*gamma1)),
/// phi the standard normal density and
///   gamma1 = log R0 - ((alpha+1)/alpha)*log((alpha+1)*R0/(R0+alpha)).
double p1_aux_asymptotic(const ModelParams& p);

}  // namespace pll
