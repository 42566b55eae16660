#include "pll/logprob.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pll/errors.hpp"

namespace pll {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kNormTol = 1e-12;
}  // namespace

void LogSumAccumulator::add(double log_term) {
  if (log_term == kNegInf) return;
  if (empty_) {
    max_ = log_term;
    sum_ = 1.0;
    empty_ = false;
    return;
  }
  if (log_term <= max_) {
    sum_ += std::exp(log_term - max_);
  } else {
    sum_ = sum_ * std::exp(max_ - log_term) + 1.0;
    max_ = log_term;
  }
}

double LogSumAccumulator::value() const {
  if (empty_) return kNegInf;
  return max_ + std::log(sum_);
}

double log_sum_exp(const std::vector<double>& v, std::size_t first) {
  double m = kNegInf;
  for (std::size_t i = first; i < v.size(); ++i) m = std::max(m, v[i]);
  if (m == kNegInf) return kNegInf;
  double sum = 0.0;
  for (std::size_t i = first; i < v.size(); ++i) sum += std::exp(v[i] - m);
  return m + std::log(sum);
}

ProbVector::ProbVector(std::vector<double> logp_by_state) {
  if (logp_by_state.size() < 2)
    throw ValidityError("probability vector needs at least one state");
  n_ = static_cast<int>(logp_by_state.size()) - 1;
  logp_ = std::move(logp_by_state);
  logp_[0] = kNegInf;
  const double defect = log_sum_exp(logp_, 1);
  if (!(std::abs(defect) <= kNormTol))
    throw ValidityError("log probabilities not normalized, log-sum-exp = " +
                        std::to_string(defect));
  for (int n = 1; n <= n_; ++n) {
    if (logp_[static_cast<std::size_t>(n)] > kNormTol)
      throw ValidityError("log probability above zero at state " + std::to_string(n));
  }
}

ProbVector ProbVector::from_unnormalized_log(std::vector<double> logw_by_state) {
  if (logw_by_state.size() < 2)
    throw ValidityError("probability vector needs at least one state");
  logw_by_state[0] = kNegInf;
  const double z = log_sum_exp(logw_by_state, 1);
  if (!std::isfinite(z)) throw ValidityError("log weights have no finite mass");
  for (std::size_t i = 1; i < logw_by_state.size(); ++i) logw_by_state[i] -= z;
  ProbVector out;
  out.n_ = static_cast<int>(logw_by_state.size()) - 1;
  out.logp_ = std::move(logw_by_state);
  return out;
}

ProbVector ProbVector::from_weights(const std::vector<double>& w_by_state) {
  std::vector<double> logw(w_by_state.size(), kNegInf);
  for (std::size_t i = 1; i < w_by_state.size(); ++i) {
    if (w_by_state[i] < 0.0) throw ValidityError("negative probability weight");
    logw[i] = w_by_state[i] > 0.0 ? std::log(w_by_state[i]) : kNegInf;
  }
  return from_unnormalized_log(std::move(logw));
}

ProbVector ProbVector::point_mass(int n_states, int state) {
  std::vector<double> logp(static_cast<std::size_t>(n_states) + 1, kNegInf);
  logp.at(static_cast<std::size_t>(state)) = 0.0;
  ProbVector out;
  out.n_ = n_states;
  out.logp_ = std::move(logp);
  return out;
}

double ProbVector::prob(int state) const {
  return std::exp(logp_[static_cast<std::size_t>(state)]);
}

double ProbVector::log_norm_defect() const { return log_sum_exp(logp_, 1); }

double tv_distance(const ProbVector& a, const ProbVector& b) {
  if (a.states() != b.states())
    throw ValidityError("TV distance between vectors of different sizes");
  double sum = 0.0;
  for (int n = 1; n <= a.states(); ++n) {
    const double la = a.logp(n);
    const double lb = b.logp(n);
    if (la == kNegInf && lb == kNegInf) continue;
    const double hi = std::max(la, lb);
    const double lo = std::min(la, lb);
    // |e^la - e^lb| = e^hi * (1 - e^(lo-hi)), stable via expm1
    sum += std::exp(hi) * -std::expm1(lo - hi);
  }
  return 0.5 * sum;
}

}  // namespace pll
