#include "pll/model.hpp"

#include <cmath>
#include <string>

#include "pll/errors.hpp"

namespace pll {

void ModelParams::validate() const {
  if (N < 2) throw ValidityError("N must be >= 2, got " + std::to_string(N));
  if (!(R0 > 0.0)) throw ValidityError("R0 must be > 0");
  if (!(alpha >= 0.0)) throw ValidityError("alpha must be >= 0");
  if (!(mu > 0.0)) throw ValidityError("mu must be > 0");
  if (!(s > 0.0)) throw ValidityError("s must be > 0");
}

void ModelParams::require_supercritical() const {
  validate();
  if (!(R0 > 1.0))
    throw ValidityError("asymptotic approximations require R0 > 1, got R0 = " +
                        std::to_string(R0));
}

double frac_pow(int n, int N, double s) {
  if (n == 0) return 0.0;
  if (n == N) return 1.0;
  return std::exp(s * std::log(static_cast<double>(n) / N));
}

RateTable rates(const ModelParams& p) {
  p.validate();
  RateTable r;
  r.N = p.N;
  r.birth.resize(static_cast<std::size_t>(p.N) + 1);
  r.death.resize(static_cast<std::size_t>(p.N) + 1);
  for (int n = 0; n <= p.N; ++n) {
    const double f = frac_pow(n, p.N, p.s);
    r.birth[static_cast<std::size_t>(n)] = p.mu * p.R0 * (1.0 - f) * n;
    r.death[static_cast<std::size_t>(n)] = p.mu * (1.0 + p.alpha * f) * n;
  }
  r.birth[static_cast<std::size_t>(p.N)] = 0.0;  // ceiling reflects exactly
  return r;
}

BartlettParams to_bartlett(const ModelParams& p) {
  p.validate();
  BartlettParams q;
  const double Ns = std::exp(p.s * std::log(static_cast<double>(p.N)));
  q.a1 = p.mu * p.R0;
  q.a2 = p.mu;
  q.b1 = p.mu * p.R0 / Ns;
  q.b2 = p.mu * p.alpha / Ns;
  q.s = p.s;
  q.a = q.a1 - q.a2;
  q.b = q.b1 + q.b2;
  q.c = q.a1 + q.a2;
  q.d = q.b1 - q.b2;
  return q;
}

ModelParams from_bartlett(const BartlettParams& q, int N) {
  if (!(q.a1 > 0.0) || !(q.a2 > 0.0) || !(q.b1 > 0.0) || !(q.s > 0.0))
    throw IntegrityError("a1, a2, b1 and s must be positive");
  if (q.b2 < 0.0) throw IntegrityError("b2 must be >= 0");
  const double ceiling = std::exp(std::log(q.a1 / q.b1) / q.s);
  if (std::abs(ceiling - N) > 1e-9 * N)
    throw IntegrityError("(a1/b1)^(1/s) = " + std::to_string(ceiling) +
                         " does not match N = " + std::to_string(N));
  ModelParams p;
  p.N = N;
  p.mu = q.a2;
  p.R0 = q.a1 / q.a2;
  p.s = q.s;
  const double Ns = std::exp(q.s * std::log(static_cast<double>(N)));
  p.alpha = q.b2 * Ns / q.a2;
  p.validate();
  return p;
}

}  // namespace pll
