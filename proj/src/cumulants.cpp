#include "pll/cumulants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pll/errors.hpp"

namespace pll {

namespace {

// Neumaier compensated accumulator; the 7th central moments at N = 400 mix
// magnitudes up to ~1e13, plain summation loses the small terms.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

double CumulantSet::kappa(int order) const {
  if (order < 1 || order > max_order)
    throw std::out_of_range("cumulant of order " + std::to_string(order) +
                            " unavailable, max_order = " + std::to_string(max_order));
  return values[static_cast<std::size_t>(order - 1)];
}

CumulantSet cumulants_of(const ProbVector& dist, int max_order) {
  if (max_order < 1 || max_order > 7)
    throw std::invalid_argument("max_order must be in 1..7");

  const int N = dist.states();
  CompensatedSum mean_acc;
  for (int n = 1; n <= N; ++n) mean_acc.add(n * dist.prob(n));
  const double m = mean_acc.value();

  // central moments m2..m7
  double cm[8] = {0.0};
  if (max_order >= 2) {
    CompensatedSum acc[8];
    for (int n = 1; n <= N; ++n) {
      const double p = dist.prob(n);
      const double d = n - m;
      double dk = d;
      for (int k = 2; k <= max_order; ++k) {
        dk *= d;
        acc[k].add(dk * p);
      }
    }
    for (int k = 2; k <= max_order; ++k) cm[k] = acc[k].value();
  }

  CumulantSet out;
  out.max_order = max_order;
  out.values[0] = m;
  if (max_order >= 2) out.values[1] = cm[2];
  if (max_order >= 3) out.values[2] = cm[3];
  if (max_order >= 4) out.values[3] = cm[4] - 3.0 * cm[2] * cm[2];
  if (max_order >= 5) out.values[4] = cm[5] - 10.0 * cm[3] * cm[2];
  if (max_order >= 6)
    out.values[5] = cm[6] - 15.0 * cm[4] * cm[2] - 10.0 * cm[3] * cm[3] +
                    30.0 * cm[2] * cm[2] * cm[2];
  if (max_order >= 7)
    out.values[6] = cm[7] - 21.0 * cm[5] * cm[2] - 35.0 * cm[4] * cm[3] +
                    210.0 * cm[3] * cm[2] * cm[2];
  return out;
}

OdeRhs ode_rhs(const ModelParams& p, const CumulantSet& k) {
  p.validate();
  const double sr = std::round(p.s);
  if (!(sr == p.s) || sr < 1.0 || sr > 4.0)
    throw UnsupportedS("cumulant derivatives are available for s in {1,2,3,4} only");
  const int s = static_cast<int>(sr);
  const int needed = s + 3;
  if (k.max_order < needed)
    throw std::invalid_argument("cumulant derivatives for s = " + std::to_string(s) +
                                " need cumulants up to order " + std::to_string(needed));

  const double k1 = k.kappa(1);
  const double k2 = k.kappa(2);
  const double k3 = k.kappa(3);
  const double k4 = k.kappa(4);
  const double am = p.mu * (p.R0 - 1.0);
  const double cp = p.mu * (p.R0 + 1.0);
  const double Ns = std::exp(p.s * std::log(static_cast<double>(p.N)));
  const double bp = p.mu * (p.R0 + p.alpha) / Ns;
  const double dm = p.mu * (p.R0 - p.alpha) / Ns;

  OdeRhs out;
  switch (s) {
    case 1: {
      out.A = am * k1 - bp * (k1 * k1 + k2);
      out.B = 2.0 * am * k2 - bp * (4.0 * k1 * k2 + 2.0 * k3) + cp * k1 -
              dm * (k1 * k1 + k2);
      out.C = am * (k1 + 3.0 * k3) -
              bp * (k1 * k1 + 6.0 * k1 * k3 + 6.0 * k2 * k2 + k2 + 3.0 * k4) +
              3.0 * cp * k2 - dm * (6.0 * k1 * k2 + 3.0 * k3);
      break;
    }
    case 2: {
      const double k5 = k.kappa(5);
      const double P = k1 * k1 * k1 + 3.0 * k1 * k2 + k3;
      const double Q = 3.0 * k1 * k1 * k2 + 3.0 * k1 * k3 + 3.0 * k2 * k2 + k4;
      out.A = am * k1 - bp * P;
      out.B = 2.0 * am * k2 + cp * k1 - dm * P - 2.0 * bp * Q;
      out.C = am * (k1 + 3.0 * k3) + 3.0 * cp * k2 - 3.0 * dm * Q -
              bp * (k1 * k1 * k1 + 9.0 * k1 * k1 * k3 + 18.0 * k1 * k2 * k2 +
                    3.0 * k1 * k2 + 9.0 * k1 * k4 + 27.0 * k2 * k3 + k3 + 3.0 * k5);
      break;
    }
    case 3: {
      const double k5 = k.kappa(5);
      const double k6 = k.kappa(6);
      const double k1_2 = k1 * k1;
      const double k1_3 = k1_2 * k1;
      const double P = k1_2 * k1_2 + 6.0 * k1_2 * k2 + 4.0 * k1 * k3 + 3.0 * k2 * k2 + k4;
      const double Q = 4.0 * k1_3 * k2 + 6.0 * k1_2 * k3 + 12.0 * k1 * k2 * k2 +
                       4.0 * k1 * k4 + 10.0 * k2 * k3 + k5;
      out.A = am * k1 - bp * P;
      out.B = 2.0 * am * k2 + cp * k1 - dm * P - 2.0 * bp * Q;
      out.C = am * (k1 + 3.0 * k3) + 3.0 * cp * k2 - 3.0 * dm * Q -
              bp * (k1_2 * k1_2 + 12.0 * k1_3 * k3 + 36.0 * k1_2 * k2 * k2 +
                    6.0 * k1_2 * k2 + 18.0 * k1_2 * k4 + 108.0 * k1 * k2 * k3 +
                    4.0 * k1 * k3 + 12.0 * k1 * k5 + 36.0 * k2 * k2 * k2 +
                    3.0 * k2 * k2 + 42.0 * k2 * k4 + 30.0 * k3 * k3 + k4 + 3.0 * k6);
      break;
    }
    case 4: {
      const double k5 = k.kappa(5);
      const double k6 = k.kappa(6);
      const double k7 = k.kappa(7);
      const double k1_2 = k1 * k1;
      const double k1_3 = k1_2 * k1;
      const double k1_4 = k1_2 * k1_2;
      const double k1_5 = k1_4 * k1;
      const double k2_2 = k2 * k2;
      const double P = k1_5 + 10.0 * k1_3 * k2 + 10.0 * k1_2 * k3 +
                       15.0 * k1 * k2_2 + 5.0 * k1 * k4 + 10.0 * k2 * k3 + k5;
      const double Q = 5.0 * k1_4 * k2 + 10.0 * k1_3 * k3 + 30.0 * k1_2 * k2_2 +
                       10.0 * k1_2 * k4 + 50.0 * k1 * k2 * k3 + 5.0 * k1 * k5 +
                       15.0 * k2_2 * k2 + 15.0 * k2 * k4 + 10.0 * k3 * k3 + k6;
      out.A = am * k1 - bp * P;
      out.B = 2.0 * am * k2 + cp * k1 - dm * P - 2.0 * bp * Q;
      out.C = am * (k1 + 3.0 * k3) + 3.0 * cp * k2 - 3.0 * dm * Q -
              bp * (k1_5 + 15.0 * k1_4 * k3 + 60.0 * k1_3 * k2_2 + 10.0 * k1_3 * k2 +
                    30.0 * k1_3 * k4 + 270.0 * k1_2 * k2 * k3 + 10.0 * k1_2 * k3 +
                    30.0 * k1_2 * k5 + 180.0 * k1 * k2_2 * k2 + 15.0 * k1 * k2_2 +
                    210.0 * k1 * k2 * k4 + 150.0 * k1 * k3 * k3 + 5.0 * k1 * k4 +
                    15.0 * k1 * k6 + 285.0 * k2_2 * k3 + 10.0 * k2 * k3 +
                    60.0 * k2 * k5 + 105.0 * k3 * k4 + k5 + 3.0 * k7);
      break;
    }
    default:
      break;
  }
  return out;
}

}  // namespace pll
