#pragma once

#include <vector>

namespace pll {

/// Streaming log-sum-exp accumulator: value() = log(sum of exp(term)) over
/// all terms added so far. Exact for -inf terms; no intermediate overflow.
class LogSumAccumulator {
 public:
  void add(double log_term);
  double value() const;
  bool empty() const { return empty_; }

 private:
  double max_ = 0.0;
  double sum_ = 0.0;  // sum of exp(term - max_)
  bool empty_ = true;
};

/// log(sum of exp(v[i])) over the whole vector (two-pass, max-shifted).
double log_sum_exp(const std::vector<double>& v, std::size_t first = 0);

/// Probability distribution over states 1..N held as natural-log
/// probabilities. logp[0] is a -infinity sentinel so indices match states.
/// Normalization (log-sum-exp == 0 within 1e-12) is an invariant of every
/// constructed instance; -infinity entries are allowed.
class ProbVector {
 public:
  /// Takes log-probabilities indexed by state (size N+1, entry 0 ignored);
  /// throws ValidityError if not normalized within tolerance.
  explicit ProbVector(std::vector<double> logp_by_state);

  /// Normalizes arbitrary log-weights (size N+1, entry 0 ignored).
  static ProbVector from_unnormalized_log(std::vector<double> logw_by_state);

  /// Normalizes linear-scale weights (size N+1, entry 0 ignored).
  static ProbVector from_weights(const std::vector<double>& w_by_state);

  static ProbVector point_mass(int n_states, int state);

  int states() const { return n_; }
  double logp(int state) const { return logp_[static_cast<std::size_t>(state)]; }
  double prob(int state) const;
  const std::vector<double>& log_data() const { return logp_; }

  /// log-sum-exp of the stored entries; 0 up to rounding by construction.
  double log_norm_defect() const;

 private:
  ProbVector() = default;
  int n_ = 0;
  std::vector<double> logp_;
};

/// Total-variation distance, 0.5 * sum |p_n - q_n|, evaluated from the log
/// representations without forming differences of underflowed values.
double tv_distance(const ProbVector& a, const ProbVector& b);

}  // namespace pll
