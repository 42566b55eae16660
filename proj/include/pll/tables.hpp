#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pll/model.hpp"
#include "pll/qsd.hpp"
#include "pll/rivals.hpp"

namespace pll {

/// One output cell; monostate renders as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, long long, double, std::string>;

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<Cell>> rows;
};

struct SolveOptions {
  double tol = kDefaultQsdTol;
  long max_iter = kDefaultQsdMaxIter;
};

/// Error-study row for one (N, s, method, cumulant order) cell:
/// error = numeric - approx; ratio = error at the previous (halved) N over
/// this error, when the grid carries successive N values.
struct ApproxReport {
  int N = 0;
  double s = 0.0;
  MethodTag method = MethodTag::kPreferred;
  int order = 0;
  double approx = 0.0;
  double numeric = 0.0;
  double error = 0.0;
  std::optional<double> ratio_from_prev;
};

/// Per-row views of the quasi-stationary distribution: n, q_n, log q_n.
Table solve_table(const ModelParams& p, const SolveOptions& opt = {});

/// kappa_1..kappa_7 of the solved QSD.
Table cumulant_table(const ModelParams& p, const SolveOptions& opt = {});

/// Truncated-expansion values with per-power terms, next to the numeric
/// cumulants and the resulting error terms.
Table approx_table(const ModelParams& p, const SolveOptions& opt = {});

/// Error study at one parameter point for the given methods.
std::vector<ApproxReport> error_reports(const std::vector<int>& Ns, double s,
                                        double R0, double alpha,
                                        const std::vector<MethodTag>& methods,
                                        const SolveOptions& opt = {});
Table compare_table(const ModelParams& p, const std::vector<MethodTag>& methods,
                    const SolveOptions& opt = {});

/// Built-in study grids, selected by id 1..5:
///  1: q1 over s = 1..4, N in {100,200,400} at R0 = 2, alpha = 1
///  2: kappa_1..7 over s in {1,4}, N in {100,200,400} at R0 = 10, alpha = 1
///  3: h1..h5 at integer s = 1..10
///  4: preferred-method error terms, s in {0.5, 3.5}, R0 = 10, alpha = 1
///  5: preferred/BR1/BB error terms at s = 1, R0 = 10, alpha = 1
Table reference_table(int id, const SolveOptions& opt = {});

/// QSD point series (s, n, q_n) for s in {0.2, 0.5, 1, 3, 10} at N = 100,
/// R0 = 5, alpha = 1.
Table figure1_table(const SolveOptions& opt = {});

}  // namespace pll
