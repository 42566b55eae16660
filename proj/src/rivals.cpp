#include "pll/rivals.hpp"

#include <cmath>

#include "pll/errors.hpp"

namespace pll {

const char* method_name(MethodTag m) {
  switch (m) {
    case MethodTag::kPreferred: return "preferred";
    case MethodTag::kBgl: return "bgl";
    case MethodTag::kBr1: return "br1";
    case MethodTag::kBr2: return "br2";
    case MethodTag::kBb: return "bb";
  }
  return "?";
}

std::optional<MethodTag> parse_method(std::string_view name) {
  if (name == "preferred") return MethodTag::kPreferred;
  if (name == "bgl") return MethodTag::kBgl;
  if (name == "br1") return MethodTag::kBr1;
  if (name == "br2") return MethodTag::kBr2;
  if (name == "bb") return MethodTag::kBb;
  return std::nullopt;
}

namespace {

void require_unit_s(const ModelParams& p, const char* what) {
  if (p.s != 1.0)
    throw UnsupportedS(std::string(what) + " is published for s = 1 only");
}

ApproxCumulants single_term(double k1, double k2, double k3) {
  ApproxCumulants a;
  a.kappa1 = k1;
  a.kappa2 = k2;
  a.kappa3 = k3;
  a.kappa1_terms = {k1};
  a.kappa2_terms = {k2};
  a.kappa3_terms = {k3};
  return a;
}

}  // namespace

ApproxCumulants bgl_cumulants(const ModelParams& p) {
  p.validate();
  require_unit_s(p, "the BGL family");
  const BartlettParams q = to_bartlett(p);
  const double k1 = q.a / q.b;
  const double k2 = (q.a1 - q.b1 * k1) / q.b;
  const double k3 = -q.d / q.b * k2;
  return single_term(k1, k2, k3);
}

RivalCoeffSet br1_coefficients(double R0, double alpha) {
  if (!(alpha >= 0.0)) throw ValidityError("alpha must be >= 0");
  if (!(R0 > 1.0)) throw ValidityError("BR1 coefficients require R0 > 1");
  const double aR = (alpha + 1.0) * R0;
  const double q = R0 * R0 + alpha;
  const double rp = R0 + alpha;
  const double rm = R0 - 1.0;
  RivalCoeffSet c;
  c.tag = MethodTag::kBr1;
  c.x1 = rm / rp;
  c.x2 = -aR / (rp * rm);
  c.x3 = aR * (q - 5.0 * aR) / (rp * rm * rm * rm);
  c.y1 = aR / (rp * rp);
  c.y2 = -aR * (q - 4.0 * aR) / (rp * rp * rm * rm);
  c.z1 = aR * (q - 3.0 * aR) / (rp * rp * rp * rm);
  return c;
}

RivalCoeffSet br2_coefficients(double R0, double alpha) {
  const CoeffSet pref = coefficients(R0, alpha, 1.0);
  RivalCoeffSet c;
  c.tag = MethodTag::kBr2;
  c.x1 = pref.x1;
  c.x2 = pref.x2;
  c.x3 = pref.x3;
  c.y1 = pref.y1;
  c.y2 = pref.y2;
  c.z1 = pref.z1;
  return c;
}

ApproxCumulants bb_cumulants(const ModelParams& p) {
  p.validate();
  require_unit_s(p, "the BB family");
  if (!(p.R0 > 1.0)) throw ValidityError("the BB family requires R0 > 1");
  const double x1 = (p.R0 - 1.0) / (p.R0 + p.alpha);
  const double H = (p.alpha + 1.0) * p.R0 / ((p.R0 - 1.0) * (p.R0 - 1.0));
  const double N = p.N;
  const double k1 = x1 * N / (1.0 + H / N);
  const double k2 = k1 * k1 * H / N;
  const double A = p.mu * (p.R0 - 1.0) - p.mu * (p.R0 + p.alpha) / N * k1;
  const double B = p.mu * (p.R0 + 1.0) / k1 - 2.0 * p.mu * (p.R0 - p.alpha) / N;
  const double C = p.mu * (p.R0 - 1.0) / k1 - 2.0 * p.mu * (p.R0 + p.alpha) / N;
  const double D = -p.mu * (p.R0 - p.alpha) / (N * k1);
  const double k3 = -(A + B) / (C + D) * k2;
  return single_term(k1, k2, k3);
}

ApproxCumulants compose(const RivalCoeffSet& c, int N) {
  ApproxCumulants a;
  if (c.x1) a.kappa1_terms.push_back(*c.x1 * N);
  if (c.x2) a.kappa1_terms.push_back(*c.x2);
  if (c.x3) a.kappa1_terms.push_back(*c.x3 / N);
  if (c.y1) a.kappa2_terms.push_back(*c.y1 * N);
  if (c.y2) a.kappa2_terms.push_back(*c.y2);
  if (c.z1) a.kappa3_terms.push_back(*c.z1 * N);
  for (double t : a.kappa1_terms) a.kappa1 += t;
  for (double t : a.kappa2_terms) a.kappa2 += t;
  for (double t : a.kappa3_terms) a.kappa3 += t;
  return a;
}

ApproxCumulants method_cumulants(MethodTag m, const ModelParams& p) {
  switch (m) {
    case MethodTag::kPreferred:
      return approx_cumulants(p);
    case MethodTag::kBgl:
      return bgl_cumulants(p);
    case MethodTag::kBr1:
      require_unit_s(p, "the BR1 family");
      return compose(br1_coefficients(p.R0, p.alpha), p.N);
    case MethodTag::kBr2:
      require_unit_s(p, "the BR2 family");
      return compose(br2_coefficients(p.R0, p.alpha), p.N);
    case MethodTag::kBb:
      return bb_cumulants(p);
  }
  throw ValidityError("unknown method");
}

}  // namespace pll
