#include "pll/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "pll/errors.hpp"

namespace pll {

namespace {

void require_region(double R0, double alpha, double s) {
  if (!(s > 0.0)) throw ValidityError("s must be > 0");
  if (!(alpha >= 0.0)) throw ValidityError("alpha must be >= 0");
  if (!(R0 > 1.0)) throw ValidityError("coefficient formulas require R0 > 1");
}

}  // namespace

HValues h_values(double s) {
  if (!(s > 0.0)) throw ValidityError("s must be > 0");
  HValues h;
  h.h1 = 1.0 / s;
  h.h2 = (s + 1.0) / (2.0 * s);
  h.h3 = (s * s + 6.0 * s + 5.0) / (12.0 * s);
  h.h4 = (s * s + 12.0 * s + 11.0) / (24.0 * s * s);
  h.h5 = 1.0 / (s * s);
  return h;
}

CoeffSet coefficients(double R0, double alpha, double s) {
  require_region(R0, alpha, s);
  const HValues h = h_values(s);
  const double ratio = (R0 - 1.0) / (R0 + alpha);
  const double g = (alpha + 1.0) * R0 / ((R0 + alpha) * (R0 - 1.0));
  const double G = (alpha + 1.0) * R0 /
                   ((R0 + alpha) * (R0 + alpha) * (R0 - 1.0) * (R0 - 1.0));
  const double q = R0 * R0 + alpha;

  CoeffSet c;
  c.x1 = std::pow(ratio, h.h1);
  c.x2 = -h.h2 * g;
  c.x3 = -G * std::pow(1.0 / ratio, h.h1) * (h.h3 * q + h.h4 * (alpha + 1.0) * R0);
  c.y1 = h.h1 * g * c.x1;
  c.y2 = h.h2 * G * q;
  c.z1 = -G * c.x1 * (h.h1 * q - h.h5 * (alpha + 1.0) * R0);
  return c;
}

CoeffSet per_s_coefficients(double R0, double alpha, int s) {
  require_region(R0, alpha, static_cast<double>(s));
  if (s < 1 || s > 4)
    throw UnsupportedS("per-exponent coefficient forms exist for s in 1..4 only");

  const double g = (alpha + 1.0) * R0 / ((R0 + alpha) * (R0 - 1.0));
  const double G = (alpha + 1.0) * R0 /
                   ((R0 + alpha) * (R0 + alpha) * (R0 - 1.0) * (R0 - 1.0));
  const double q = R0 * R0 + alpha;
  const double aR = (alpha + 1.0) * R0;
  const double ratio = (R0 - 1.0) / (R0 + alpha);

  CoeffSet c;
  switch (s) {
    case 1:
      c.x1 = ratio;
      c.x2 = -g;
      c.x3 = -aR * (R0 + 1.0) / ((R0 - 1.0) * (R0 - 1.0) * (R0 - 1.0));
      c.y1 = aR / ((R0 + alpha) * (R0 + alpha));
      c.y2 = G * q;
      c.z1 = -aR * (R0 - alpha) / ((R0 + alpha) * (R0 + alpha) * (R0 + alpha));
      break;
    case 2:
      c.x1 = std::sqrt(ratio);
      c.x2 = -0.75 * g;
      c.x3 = -G * std::sqrt(1.0 / ratio) * (7.0 / 8.0 * q + 13.0 / 32.0 * aR);
      c.y1 = 0.5 * g * c.x1;
      c.y2 = 0.75 * G * q;
      c.z1 = -G * c.x1 * (0.5 * q - 0.25 * aR);
      break;
    case 3:
      c.x1 = std::cbrt(ratio);
      c.x2 = -2.0 / 3.0 * g;
      c.x3 = -G * std::cbrt(1.0 / ratio) * (8.0 / 9.0 * q + 7.0 / 27.0 * aR);
      c.y1 = 1.0 / 3.0 * g * c.x1;
      c.y2 = 2.0 / 3.0 * G * q;
      c.z1 = -G * c.x1 * (1.0 / 3.0 * q - 1.0 / 9.0 * aR);
      break;
    case 4:
      c.x1 = std::pow(ratio, 0.25);
      c.x2 = -5.0 / 8.0 * g;
      c.x3 = -G * std::pow(1.0 / ratio, 0.25) * (15.0 / 16.0 * q + 25.0 / 128.0 * aR);
      c.y1 = 0.25 * g * c.x1;
      c.y2 = 5.0 / 8.0 * G * q;
      c.z1 = -G * c.x1 * (0.25 * q - 1.0 / 16.0 * aR);
      break;
  }
  return c;
}

ApproxCumulants approx_cumulants(const ModelParams& p) {
  p.require_supercritical();
  const CoeffSet c = coefficients(p.R0, p.alpha, p.s);
  const double N = p.N;
  ApproxCumulants a;
  a.kappa1_terms = {c.x1 * N, c.x2, c.x3 / N};
  a.kappa2_terms = {c.y1 * N, c.y2};
  a.kappa3_terms = {c.z1 * N};
  a.kappa1 = a.kappa1_terms[0] + a.kappa1_terms[1] + a.kappa1_terms[2];
  a.kappa2 = a.kappa2_terms[0] + a.kappa2_terms[1];
  a.kappa3 = a.kappa3_terms[0];
  return a;
}

SThresholds s_thresholds(double R0, double alpha) {
  if (!(alpha >= 0.0)) throw ValidityError("alpha must be >= 0");
  if (!(R0 > 1.0)) throw ValidityError("thresholds require R0 > 1");
  SThresholds t;
  t.s2 = std::log((R0 + alpha) / (R0 - 1.0));
  t.s3 = (alpha + 1.0) * R0 / (R0 * R0 + alpha);
  return t;
}

double p1_aux_asymptotic(const ModelParams& p) {
  p.require_supercritical();
  if (p.s != 1.0)
    throw UnsupportedS("the state-1 tail asymptotic is available for s = 1 only");
  if (!(p.alpha > 0.0))
    throw DomainError("the state-1 tail asymptotic requires alpha > 0");
  const double gamma1 =
      std::log(p.R0) -
      (p.alpha + 1.0) / p.alpha *
          std::log((p.alpha + 1.0) * p.R0 / (p.R0 + p.alpha));
  const double beta1 = std::sqrt(2.0 * p.N * gamma1);
  const double phi = std::exp(-0.5 * beta1 * beta1) / std::sqrt(2.0 * std::numbers::pi);
  return p.R0 * (p.R0 - 1.0) * std::sqrt((1.0 + p.alpha) * p.N) / (p.R0 + p.alpha) * phi;
}

}  // namespace pll
