#include "pll/tables.hpp"

#include <cmath>
#include <string>

#include "pll/asymptotics.hpp"
#include "pll/cumulants.hpp"
#include "pll/errors.hpp"

namespace pll {

namespace {

Cell num(double x) { return Cell{x}; }
Cell num(int x) { return Cell{static_cast<long long>(x)}; }

ModelParams grid_point(int N, double R0, double alpha, double s) {
  return ModelParams{N, R0, alpha, 1.0, s};
}

}  // namespace

Table solve_table(const ModelParams& p, const SolveOptions& opt) {
  const QsdResult r = solve_qsd(p, opt.tol, opt.max_iter);
  Table t;
  t.headers = {"n", "q", "log_q"};
  t.rows.reserve(static_cast<std::size_t>(p.N));
  for (int n = 1; n <= p.N; ++n)
    t.rows.push_back({num(n), num(r.q.prob(n)), num(r.q.logp(n))});
  return t;
}

Table cumulant_table(const ModelParams& p, const SolveOptions& opt) {
  const QsdResult r = solve_qsd(p, opt.tol, opt.max_iter);
  const CumulantSet k = cumulants_of(r.q, 7);
  Table t;
  t.headers = {"order", "kappa"};
  for (int i = 1; i <= 7; ++i) t.rows.push_back({num(i), num(k.kappa(i))});
  return t;
}

Table approx_table(const ModelParams& p, const SolveOptions& opt) {
  const ApproxCumulants a = approx_cumulants(p);
  const QsdResult r = solve_qsd(p, opt.tol, opt.max_iter);
  const CumulantSet k = cumulants_of(r.q, 3);
  Table t;
  t.headers = {"order", "approx", "term_N", "term_const", "term_inv_N",
               "numeric", "error"};
  const std::vector<double>* terms[3] = {&a.kappa1_terms, &a.kappa2_terms,
                                         &a.kappa3_terms};
  const double approx[3] = {a.kappa1, a.kappa2, a.kappa3};
  for (int i = 0; i < 3; ++i) {
    std::vector<Cell> row{num(i + 1), num(approx[i])};
    for (std::size_t j = 0; j < 3; ++j)
      row.push_back(j < terms[i]->size() ? num((*terms[i])[j]) : Cell{});
    const double numeric = k.kappa(i + 1);
    row.push_back(num(numeric));
    row.push_back(num(numeric - approx[i]));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<ApproxReport> error_reports(const std::vector<int>& Ns, double s,
                                        double R0, double alpha,
                                        const std::vector<MethodTag>& methods,
                                        const SolveOptions& opt) {
  std::vector<ApproxReport> out;
  // numeric cumulants once per N
  std::vector<CumulantSet> numeric;
  numeric.reserve(Ns.size());
  for (int N : Ns) {
    const QsdResult r = solve_qsd(grid_point(N, R0, alpha, s), opt.tol, opt.max_iter);
    numeric.push_back(cumulants_of(r.q, 3));
  }
  for (MethodTag m : methods) {
    for (int order = 1; order <= 3; ++order) {
      std::optional<double> prev_error;
      for (std::size_t i = 0; i < Ns.size(); ++i) {
        const ApproxCumulants a = method_cumulants(m, grid_point(Ns[i], R0, alpha, s));
        ApproxReport rep;
        rep.N = Ns[i];
        rep.s = s;
        rep.method = m;
        rep.order = order;
        rep.approx = order == 1 ? a.kappa1 : order == 2 ? a.kappa2 : a.kappa3;
        rep.numeric = numeric[i].kappa(order);
        rep.error = rep.numeric - rep.approx;
        if (prev_error && *prev_error != 0.0 && rep.error != 0.0)
          rep.ratio_from_prev = *prev_error / rep.error;
        prev_error = rep.error;
        out.push_back(rep);
      }
    }
  }
  return out;
}

Table compare_table(const ModelParams& p, const std::vector<MethodTag>& methods,
                    const SolveOptions& opt) {
  p.validate();
  const QsdResult r = solve_qsd(p, opt.tol, opt.max_iter);
  const CumulantSet k = cumulants_of(r.q, 3);
  Table t;
  t.headers = {"N", "s", "method", "order", "approx", "numeric", "error"};
  for (MethodTag m : methods) {
    const ApproxCumulants a = method_cumulants(m, p);
    const double approx[3] = {a.kappa1, a.kappa2, a.kappa3};
    for (int order = 1; order <= 3; ++order) {
      const double numeric = k.kappa(order);
      t.rows.push_back({num(p.N), num(p.s), Cell{std::string(method_name(m))},
                        num(order), num(approx[order - 1]), num(numeric),
                        num(numeric - approx[order - 1])});
    }
  }
  return t;
}

namespace {

Table q1_grid_table(const SolveOptions& opt) {
  const double R0 = 2.0, alpha = 1.0;
  Table t;
  t.headers = {"s", "q1_N100", "q1_N200", "q1_N400"};
  for (int s = 1; s <= 4; ++s) {
    std::vector<Cell> row{num(s)};
    for (int N : {100, 200, 400}) {
      const QsdResult r = solve_qsd(grid_point(N, R0, alpha, s), opt.tol, opt.max_iter);
      row.push_back(num(r.q1));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table cumulant_grid_table(const SolveOptions& opt) {
  const double R0 = 10.0, alpha = 1.0;
  Table t;
  t.headers = {"s", "order", "kappa_N100", "kappa_N200", "kappa_N400"};
  for (int s : {1, 4}) {
    CumulantSet ks[3];
    int i = 0;
    for (int N : {100, 200, 400}) {
      const QsdResult r = solve_qsd(grid_point(N, R0, alpha, s), opt.tol, opt.max_iter);
      ks[i++] = cumulants_of(r.q, 7);
    }
    for (int order = 1; order <= 7; ++order)
      t.rows.push_back({num(s), num(order), num(ks[0].kappa(order)),
                        num(ks[1].kappa(order)), num(ks[2].kappa(order))});
  }
  return t;
}

Table h_grid_table() {
  Table t;
  t.headers = {"s", "h1", "h2", "h3", "h4", "h5"};
  for (int s = 1; s <= 10; ++s) {
    const HValues h = h_values(s);
    t.rows.push_back({num(s), num(h.h1), num(h.h2), num(h.h3), num(h.h4), num(h.h5)});
  }
  return t;
}

Table error_grid_table(double R0, double alpha, const std::vector<double>& svals,
                       const std::vector<MethodTag>& methods, bool by_method,
                       const SolveOptions& opt) {
  Table t;
  t.headers = by_method
                  ? std::vector<std::string>{"method", "order", "err_N100",
                                             "err_N200", "err_N400"}
                  : std::vector<std::string>{"s", "order", "err_N100", "err_N200",
                                             "err_N400"};
  const std::vector<int> Ns{100, 200, 400};
  for (double s : svals) {
    const auto reports = error_reports(Ns, s, R0, alpha, methods, opt);
    for (MethodTag m : methods) {
      for (int order = 1; order <= 3; ++order) {
        std::vector<Cell> row;
        row.push_back(by_method ? Cell{std::string(method_name(m))} : num(s));
        row.push_back(num(order));
        for (int N : Ns) {
          for (const auto& rep : reports) {
            if (rep.method == m && rep.order == order && rep.N == N)
              row.push_back(num(rep.error));
          }
        }
        t.rows.push_back(std::move(row));
      }
    }
  }
  return t;
}

}  // namespace

Table reference_table(int id, const SolveOptions& opt) {
  switch (id) {
    case 1:
      return q1_grid_table(opt);
    case 2:
      return cumulant_grid_table(opt);
    case 3:
      return h_grid_table();
    case 4:
      return error_grid_table(10.0, 1.0, {0.5, 3.5}, {MethodTag::kPreferred},
                              /*by_method=*/false, opt);
    case 5:
      return error_grid_table(
          10.0, 1.0, {1.0},
          {MethodTag::kPreferred, MethodTag::kBr1, MethodTag::kBb},
          /*by_method=*/true, opt);
    default:
      throw ValidityError("table id must be in 1..5");
  }
}

Table figure1_table(const SolveOptions& opt) {
  Table t;
  t.headers = {"s", "n", "q"};
  for (double s : {0.2, 0.5, 1.0, 3.0, 10.0}) {
    const QsdResult r = solve_qsd(grid_point(100, 5.0, 1.0, s), opt.tol, opt.max_iter);
    for (int n = 1; n <= 100; ++n)
      t.rows.push_back({num(s), num(n), num(r.q.prob(n))});
  }
  return t;
}

}  // namespace pll
