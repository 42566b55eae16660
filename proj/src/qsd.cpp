#include "pll/qsd.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "pll/errors.hpp"

namespace pll {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

LadderSequences ladders(const RateTable& r) {
  const int N = r.N;
  for (int n = 1; n <= N - 1; ++n) {
    if (!(r.birth[static_cast<std::size_t>(n)] > 0.0))
      throw DegenerateRates("birth rate vanishes at interior state " + std::to_string(n));
  }
  for (int n = 1; n <= N; ++n) {
    if (!(r.death[static_cast<std::size_t>(n)] > 0.0))
      throw DegenerateRates("death rate not positive at state " + std::to_string(n));
  }
  LadderSequences L;
  L.N = N;
  L.log_pi.assign(static_cast<std::size_t>(N) + 1, 0.0);
  L.log_rho.assign(static_cast<std::size_t>(N) + 1, 0.0);
  L.log_pi[0] = L.log_rho[0] = kNegInf;  // state 0 unused
  for (int n = 2; n <= N; ++n) {
    const double log_birth = std::log(r.birth[static_cast<std::size_t>(n - 1)]);
    L.log_pi[static_cast<std::size_t>(n)] =
        L.log_pi[static_cast<std::size_t>(n - 1)] + log_birth -
        std::log(r.death[static_cast<std::size_t>(n)]);
    L.log_rho[static_cast<std::size_t>(n)] =
        L.log_rho[static_cast<std::size_t>(n - 1)] + log_birth -
        std::log(r.death[static_cast<std::size_t>(n - 1)]);
  }
  return L;
}

ProbVector aux_stationary0(const LadderSequences& L) {
  return ProbVector::from_unnormalized_log(L.log_pi);
}

ProbVector aux_stationary1(const LadderSequences& L) {
  return ProbVector::from_unnormalized_log(L.log_rho);
}

ProbVector restart_map(const ProbVector& nu, const LadderSequences& L) {
  const int N = L.N;
  if (nu.states() != N)
    throw ValidityError("restart distribution size does not match the ladder size");

  // Survival tails T_k = sum_{j >= k} nu_j, accumulated from the top state
  // so small tails never come from cancelling the head mass.
  std::vector<double> log_tail(static_cast<std::size_t>(N) + 2, kNegInf);
  {
    LogSumAccumulator acc;
    for (int k = N; k >= 1; --k) {
      acc.add(nu.logp(k));
      log_tail[static_cast<std::size_t>(k)] = acc.value();
    }
  }

  // S_n = sum_{k <= n} T_k / rho_k as a running log-sum-exp, then
  // p_n proportional to pi_n * S_n.
  std::vector<double> logw(static_cast<std::size_t>(N) + 1, kNegInf);
  LogSumAccumulator s_acc;
  for (int n = 1; n <= N; ++n) {
    s_acc.add(log_tail[static_cast<std::size_t>(n)] - L.log_rho[static_cast<std::size_t>(n)]);
    logw[static_cast<std::size_t>(n)] = L.log_pi[static_cast<std::size_t>(n)] + s_acc.value();
  }
  return ProbVector::from_unnormalized_log(std::move(logw));
}

QsdResult solve_qsd(const ModelParams& p, double tol, long max_iter) {
  p.validate();
  if (!(tol > 0.0)) throw ValidityError("tol must be > 0");
  if (max_iter < 1) throw ValidityError("max_iter must be >= 1");

  const RateTable r = rates(p);
  const LadderSequences L = ladders(r);
  ProbVector cur = (p.R0 > 1.0) ? aux_stationary0(L) : aux_stationary1(L);

  double residual = std::numeric_limits<double>::infinity();
  for (long it = 1; it <= max_iter; ++it) {
    ProbVector next = restart_map(cur, L);
    residual = tv_distance(cur, next);
    cur = std::move(next);
    if (residual <= tol) {
      const double q1 = std::exp(cur.logp(1));
      return QsdResult{std::move(cur), it, residual, q1};
    }
  }
  throw NoConvergence(max_iter, residual);
}

ProbVector qsd_oracle_small(const ModelParams& p, double tol, long max_iter) {
  if (p.N == 1) {  // trivial state space
    ModelParams q = p;
    q.N = 2;
    q.validate();
    return ProbVector::point_mass(1, 1);
  }
  p.validate();
  if (p.N > 50) throw ValidityError("reference solver is limited to N <= 50");

  const RateTable r = rates(p);
  const int N = p.N;
  double max_exit = 0.0;
  for (int n = 1; n <= N; ++n) {
    max_exit = std::max(max_exit, r.birth[static_cast<std::size_t>(n)] +
                                      r.death[static_cast<std::size_t>(n)]);
  }
  const double h = 0.5 / max_exit;

  std::vector<double> v(static_cast<std::size_t>(N), 1.0 / N);
  std::vector<double> next(static_cast<std::size_t>(N));
  double last_diff = -1.0;
  double diff = std::numeric_limits<double>::infinity();
  for (long it = 1; it <= max_iter; ++it) {
    // left multiplication by I + h*Q of the chain killed at zero
    for (int n = 1; n <= N; ++n) {
      const std::size_t i = static_cast<std::size_t>(n - 1);
      double acc = v[i] * (1.0 - h * (r.birth[static_cast<std::size_t>(n)] +
                                      r.death[static_cast<std::size_t>(n)]));
      if (n > 1) acc += v[i - 1] * h * r.birth[static_cast<std::size_t>(n) - 1];
      if (n < N) acc += v[i + 1] * h * r.death[static_cast<std::size_t>(n) + 1];
      next[i] = acc;
    }
    double total = 0.0;
    for (double x : next) total += x;
    diff = 0.0;
    for (std::size_t i = 0; i < next.size(); ++i) {
      next[i] /= total;
      diff += std::abs(next[i] - v[i]);
    }
    diff *= 0.5;
    v.swap(next);
    if (diff <= 1e-16) break;  // at machine precision
    if (last_diff > 0.0) {
      const double rho = diff / last_diff;
      // geometric extrapolation of the remaining error
      if (rho < 1.0 && diff * rho / (1.0 - rho) < 0.1 * tol) break;
    }
    last_diff = diff;
    if (it == max_iter) throw NoConvergence(max_iter, diff);
  }

  std::vector<double> logp(static_cast<std::size_t>(N) + 1, kNegInf);
  for (int n = 1; n <= N; ++n)
    logp[static_cast<std::size_t>(n)] = std::log(v[static_cast<std::size_t>(n - 1)]);
  return ProbVector::from_unnormalized_log(std::move(logp));
}

}  // namespace pll
