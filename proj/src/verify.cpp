#include "pll/verify.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "pll/asymptotics.hpp"
#include "pll/cumulants.hpp"
#include "pll/emit.hpp"
#include "pll/errors.hpp"

namespace pll {

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

double rel_err(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

struct Runner {
  VerifyReport report;

  void check(const std::string& name, const std::function<double()>& worst,
             double threshold) {
    VerifyCheck c;
    c.name = name;
    try {
      const double w = worst();
      c.pass = w <= threshold;
      std::ostringstream os;
      os << "worst " << w << " vs " << threshold;
      c.detail = os.str();
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = std::string("exception: ") + e.what();
    }
    report.checks.push_back(std::move(c));
  }
};

double worst_round_trip() {
  double worst = 0.0;
  for (int N : {57, 100, 400})
    for (double R0 : {0.5, 2.0, 10.0})
      for (double alpha : {0.0, 1.0, 3.0})
        for (double s : {1.0, 2.0, 3.5}) {
          const ModelParams p{N, R0, alpha, 0.7, s};
          const ModelParams back = from_bartlett(to_bartlett(p), N);
          worst = std::max({worst, rel_err(back.R0, p.R0), rel_err(back.alpha, p.alpha),
                            rel_err(back.mu, p.mu), rel_err(back.s, p.s)});
        }
  return worst;
}

double worst_rate_equivalence() {
  double worst = 0.0;
  for (int N : {57, 200})
    for (double R0 : {0.5, 2.0, 10.0})
      for (double alpha : {0.0, 1.0})
        for (double s : {1.0, 2.0, 3.5}) {
          const ModelParams p{N, R0, alpha, 1.3, s};
          const RateTable r = rates(p);
          const BartlettParams q = to_bartlett(p);
          const double scale = p.mu * p.R0 * N;  // for the zero-by-construction entries
          for (int n = 0; n <= N; ++n) {
            const double ns = n == 0 ? 0.0 : std::exp(q.s * std::log(double(n)));
            const double birth = (q.a1 - q.b1 * ns) * n;
            const double death = (q.a2 + q.b2 * ns) * n;
            const double ref_birth = r.birth[std::size_t(n)];
            worst = std::max(worst, ref_birth == 0.0
                                        ? std::abs(birth) / scale
                                        : rel_err(birth, ref_birth));
            worst = std::max(worst, rel_err(death, r.death[std::size_t(n)]));
          }
        }
  return worst;
}

double worst_ladder_identity() {
  const RateTable r = rates({100, 2.0, 1.0, 1.0, 1.0});
  const LadderSequences L = ladders(r);
  double worst = 0.0;
  for (int n = 1; n <= 100; ++n) {
    const double lhs = L.log_rho[std::size_t(n)] - L.log_pi[std::size_t(n)];
    const double rhs = std::log(r.death[std::size_t(n)]) - std::log(r.death[1]);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double worst_detailed_balance() {
  const RateTable r = rates({100, 2.0, 1.0, 1.0, 1.0});
  const LadderSequences L = ladders(r);
  const ProbVector p0 = aux_stationary0(L);
  const ProbVector p1 = aux_stationary1(L);
  double worst = 0.0;
  for (int n = 2; n <= 100; ++n) {
    const double f0 = r.death[std::size_t(n)] * p0.prob(n) /
                      (r.birth[std::size_t(n - 1)] * p0.prob(n - 1));
    const double f1 = r.death[std::size_t(n - 1)] * p1.prob(n) /
                      (r.birth[std::size_t(n - 1)] * p1.prob(n - 1));
    worst = std::max({worst, std::abs(f0 - 1.0), std::abs(f1 - 1.0)});
  }
  return worst;
}

double worst_normalization_and_fixed_point(double* fixed_point_worst) {
  double norm_worst = 0.0;
  *fixed_point_worst = 0.0;
  for (double R0 : {0.5, 2.0, 10.0})
    for (double s : {1.0, 3.5}) {
      const ModelParams p{150, R0, 1.0, 1.0, s};
      const QsdResult res = solve_qsd(p);
      norm_worst = std::max(norm_worst, std::abs(res.q.log_norm_defect()));
      const ProbVector mapped = restart_map(res.q, ladders(rates(p)));
      *fixed_point_worst =
          std::max(*fixed_point_worst, tv_distance(mapped, res.q) / (10.0 * kDefaultQsdTol));
    }
  return norm_worst;
}

double worst_oracle_agreement() {
  double worst = 0.0;
  for (int N : {7, 23, 41})
    for (double R0 : {0.5, 2.0, 10.0})
      for (double s : {1.0, 3.5}) {
        const ModelParams p{N, R0, 1.0, 1.0, s};
        worst = std::max(worst, tv_distance(solve_qsd(p).q, qsd_oracle_small(p)));
      }
  return worst;
}

double worst_mu_invariance() {
  const QsdResult ref = solve_qsd({100, 2.0, 1.0, 1.0, 1.0});
  double worst = 0.0;
  for (double mu : {0.5, 2.0}) {
    const QsdResult other = solve_qsd({100, 2.0, 1.0, mu, 1.0});
    for (int n = 1; n <= 100; ++n)
      worst = std::max(worst, std::abs(ref.q.prob(n) - other.q.prob(n)));
  }
  return worst;
}

double worst_q1_doubling() {
  // log q1 should roughly double when N doubles; return distance from 2.
  double worst = 0.0;
  for (int s = 1; s <= 4; ++s) {
    double lq[3] = {0.0, 0.0, 0.0};
    int i = 0;
    for (int N : {100, 200, 400})
      lq[i++] = solve_qsd({N, 2.0, 1.0, 1.0, double(s)}).q.logp(1);
    worst = std::max({worst, std::abs(lq[1] / lq[0] - 2.0), std::abs(lq[2] / lq[1] - 2.0)});
  }
  return worst;
}

double worst_h_table() {
  static const double refs[10][5] = {
      {1.0, 1.0, 1.0, 1.0, 1.0},
      {1.0 / 2, 3.0 / 4, 7.0 / 8, 13.0 / 32, 1.0 / 4},
      {1.0 / 3, 2.0 / 3, 8.0 / 9, 7.0 / 27, 1.0 / 9},
      {1.0 / 4, 5.0 / 8, 15.0 / 16, 25.0 / 128, 1.0 / 16},
      {1.0 / 5, 3.0 / 5, 1.0, 4.0 / 25, 1.0 / 25},
      {1.0 / 6, 7.0 / 12, 77.0 / 72, 119.0 / 864, 1.0 / 36},
      {1.0 / 7, 4.0 / 7, 8.0 / 7, 6.0 / 49, 1.0 / 49},
      {1.0 / 8, 9.0 / 16, 39.0 / 32, 57.0 / 512, 1.0 / 64},
      {1.0 / 9, 5.0 / 9, 35.0 / 27, 25.0 / 243, 1.0 / 81},
      {1.0 / 10, 11.0 / 20, 11.0 / 8, 77.0 / 800, 1.0 / 100}};
  double worst = 0.0;
  for (int s = 1; s <= 10; ++s) {
    const HValues h = h_values(s);
    const double* r = refs[s - 1];
    worst = std::max({worst, std::abs(h.h1 - r[0]), std::abs(h.h2 - r[1]),
                      std::abs(h.h3 - r[2]), std::abs(h.h4 - r[3]),
                      std::abs(h.h5 - r[4])});
  }
  return worst;
}

double worst_coefficient_cross_check() {
  double worst = 0.0;
  for (double R0 : {1.5, 2.0, 5.0, 10.0})
    for (double alpha : {0.0, 0.5, 1.0, 3.0})
      for (int s = 1; s <= 4; ++s) {
        const CoeffSet g = coefficients(R0, alpha, s);
        const CoeffSet p = per_s_coefficients(R0, alpha, s);
        worst = std::max({worst, rel_err(g.x1, p.x1), rel_err(g.x2, p.x2),
                          rel_err(g.x3, p.x3), rel_err(g.y1, p.y1),
                          rel_err(g.y2, p.y2), rel_err(g.z1, p.z1)});
      }
  return worst;
}

double threshold_structure_defects() {
  const double R0 = 5.0, alpha = 1.0;
  const SThresholds t = s_thresholds(R0, alpha);
  int defects = 0;
  const double step = 0.02;
  double prev_x1 = 0.0;
  double best_y1 = -1.0, argmax_y1 = 0.0;
  for (int i = 1; i <= 200; ++i) {
    const double s = step * i;
    const CoeffSet c = coefficients(R0, alpha, s);
    if (i > 1 && c.x1 <= prev_x1) ++defects;
    prev_x1 = c.x1;
    if (c.y1 > best_y1) {
      best_y1 = c.y1;
      argmax_y1 = s;
    }
    if (std::abs(s - t.s3) > step / 2) {
      if (s < t.s3 && c.z1 <= 0.0) ++defects;
      if (s > t.s3 && c.z1 >= 0.0) ++defects;
    }
  }
  if (std::abs(argmax_y1 - t.s2) > step + 1e-12) ++defects;
  if (std::abs(t.s2 - 0.4055) > 5e-5) ++defects;
  if (std::abs(t.s3 - 0.38462) > 5e-6) ++defects;
  return defects;
}

double near_stationarity_scaled() {
  const ModelParams p{400, 10.0, 1.0, 1.0, 4.0};
  const QsdResult r = solve_qsd(p);
  const OdeRhs rhs = ode_rhs(p, cumulants_of(r.q, 7));
  return std::abs(rhs.A) / (1e-6 * p.mu * p.N);
}

double critical_point_scaling_defects() {
  const double R0 = 10.0, alpha = 1.0;
  int defects = 0;
  for (int s = 1; s <= 4; ++s) {
    double A[3] = {}, B[3] = {}, C[3] = {};
    int i = 0;
    for (int N : {1000, 2000, 4000}) {
      const ModelParams p{N, R0, alpha, 1.0, double(s)};
      const CoeffSet c = coefficients(R0, alpha, s);
      CumulantSet k;
      k.max_order = 7;
      k.values = {c.x1 * N + c.x2 + c.x3 / N, c.y1 * N + c.y2, c.z1 * N,
                  0.0, 0.0, 0.0, 0.0};
      const OdeRhs rhs = ode_rhs(p, k);
      A[i] = rhs.A;
      B[i] = rhs.B;
      C[i] = rhs.C;
      ++i;
    }
    for (int j = 0; j < 2; ++j) {
      const double ra = A[j] / A[j + 1];
      const double rb = B[j] / B[j + 1];
      const double rc = C[j] / C[j + 1];
      if (!(ra >= 2.8 && ra <= 5.7)) ++defects;
      if (!(rb >= 1.4 && rb <= 2.8)) ++defects;
      if (!(rc >= 0.7 && rc <= 1.4)) ++defects;
    }
  }
  return defects;
}

double worst_rival_identities() {
  double worst = 0.0;
  for (double R0 : {2.0, 5.0, 10.0})
    for (double alpha : {0.0, 1.0, 3.0}) {
      const CoeffSet pref = coefficients(R0, alpha, 1.0);
      for (int N : {100, 400}) {
        const ModelParams p{N, R0, alpha, 1.0, 1.0};
        const ApproxCumulants bgl = bgl_cumulants(p);
        worst = std::max({worst, rel_err(bgl.kappa1, pref.x1 * N),
                          rel_err(bgl.kappa2, pref.y1 * N),
                          rel_err(bgl.kappa3, pref.z1 * N)});
      }
      const RivalCoeffSet br1 = br1_coefficients(R0, alpha);
      worst = std::max({worst, rel_err(*br1.x1, pref.x1), rel_err(*br1.x2, pref.x2),
                        rel_err(*br1.y1, pref.y1)});
      const RivalCoeffSet br2 = br2_coefficients(R0, alpha);
      worst = std::max({worst, rel_err(*br2.x1, pref.x1), rel_err(*br2.x2, pref.x2),
                        rel_err(*br2.x3, pref.x3), rel_err(*br2.y1, pref.y1),
                        rel_err(*br2.y2, pref.y2), rel_err(*br2.z1, pref.z1)});
      // ratio z1/y1 = -(R0-alpha)/(R0+alpha) at s = 1
      worst = std::max(worst, rel_err(pref.z1 / pref.y1, -(R0 - alpha) / (R0 + alpha)));
    }
  return worst;
}

double worst_bb_leading_order() {
  // kappa1/N -> x1 as N grows; relative gap is ~H/N, bounded here by 1e-6.
  double worst = 0.0;
  for (double R0 : {2.0, 10.0})
    for (double alpha : {0.0, 1.0, 3.0}) {
      const CoeffSet pref = coefficients(R0, alpha, 1.0);
      const ApproxCumulants bb = bb_cumulants({100000000, R0, alpha, 1.0, 1.0});
      worst = std::max(worst, std::abs(bb.kappa1 / 1e8 - pref.x1) / pref.x1);
    }
  return worst;
}

}  // namespace

VerifyReport run_verify() {
  Runner r;
  r.check("bartlett_round_trip", worst_round_trip, 1e-12);
  r.check("rate_equivalence", worst_rate_equivalence, 1e-12);
  r.check("ladder_ratio_identity", worst_ladder_identity, 1e-11);
  r.check("detailed_balance", worst_detailed_balance, 1e-10);
  double fixed_point_worst = std::numeric_limits<double>::infinity();
  r.check("qsd_normalization",
          [&] { return worst_normalization_and_fixed_point(&fixed_point_worst); }, 1e-12);
  r.check("restart_fixed_point", [&] { return fixed_point_worst; }, 1.0);
  r.check("solver_vs_reference", worst_oracle_agreement, 1e-9);
  r.check("mu_invariance", worst_mu_invariance, 1e-12);
  r.check("q1_doubling", worst_q1_doubling, 0.2);
  r.check("h_table_exact", worst_h_table, 1e-15);
  r.check("coefficient_cross_check", worst_coefficient_cross_check, 1e-12);
  r.check("threshold_structure", threshold_structure_defects, 0.0);
  r.check("near_stationarity", near_stationarity_scaled, 1.0);
  r.check("critical_point_scaling", critical_point_scaling_defects, 0.0);
  r.check("rival_identities", worst_rival_identities, 1e-12);
  r.check("bb_leading_order", worst_bb_leading_order, 1e-6);
  return std::move(r.report);
}

Table verify_table(const VerifyReport& r) {
  Table t;
  t.headers = {"check", "status", "detail"};
  for (const auto& c : r.checks)
    t.rows.push_back({Cell{c.name}, Cell{std::string(c.pass ? "PASS" : "FAIL")},
                      Cell{c.detail}});
  return t;
}

}  // namespace pll
