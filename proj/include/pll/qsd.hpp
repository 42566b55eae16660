#pragma once

#include "pll/logprob.hpp"
#include "pll/model.hpp"

namespace pll {

/// Log-scale ladder products of birth/death rate ratios, indexed by state
/// n = 1..N (entry 0 unused). log_pi[1] = log_rho[1] = 0.
///   pi_n  = prod_{k<n} birth[k] / prod_{1<k<=n} death[k]
///   rho_n = prod_{k<n} birth[k] / prod_{k<n}   death[k]
struct LadderSequences {
  int N = 0;
  std::vector<double> log_pi;
  std::vector<double> log_rho;
};

struct QsdResult {
  ProbVector q;
  long iterations = 0;
  double residual = 0.0;  // TV distance between the last two iterates
  double q1 = 0.0;        // probability of state 1, linear scale
};

inline constexpr double kDefaultQsdTol = 1e-13;
inline constexpr long kDefaultQsdMaxIter = 100000;

/// Running-sum evaluation of the ladder logs. Throws DegenerateRates if any
/// interior birth rate vanishes or any death rate above 0 is non-positive.
LadderSequences ladders(const RateTable& r);

/// Stationary law of the auxiliary process with the 1 -> 0 transition
/// removed: p_n proportional to pi_n. Satisfies detailed balance
/// death[n]*p_n = birth[n-1]*p_{n-1}.
ProbVector aux_stationary0(const LadderSequences& L);

/// Stationary law of the auxiliary process with one immortal individual
/// (death rate at state n is death[n-1]): p_n proportional to rho_n.
ProbVector aux_stationary1(const LadderSequences& L);

/// Restart map: stationary law of the process restarted at nu upon hitting
/// zero. p_n = pi_n * S_n * p_1 with S_n the cumulative sum of survival
/// tails of nu divided by rho; all sums are log-sum-exp, with the survival
/// factors accumulated backward from the top state.
ProbVector restart_map(const ProbVector& nu, const LadderSequences& L);

/// Iterates the restart map to its fixed point, the quasi-stationary
/// distribution. Starts from aux_stationary0 when R0 > 1 and from
/// aux_stationary1 otherwise; stops when the TV distance between
/// successive iterates drops to tol. Throws NoConvergence past max_iter.
QsdResult solve_qsd(const ModelParams& p, double tol = kDefaultQsdTol,
                    long max_iter = kDefaultQsdMaxIter);

/// Independent small-N reference solver: left power iteration on the lazy
/// transition matrix I + h*Q of the chain killed at zero (h = half the
/// reciprocal of the largest total exit rate, which keeps the spectrum in
/// [0,1]). Linear-scale arithmetic throughout; requires N <= 50.
ProbVector qsd_oracle_small(const ModelParams& p, double tol = 1e-12,
                            long max_iter = 5000000);

}  // namespace pll
