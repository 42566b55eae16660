#include "pll/qsd.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "pll/errors.hpp"
#include "pll/model.hpp"

using namespace pll;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// three-state hand example: birth 2,1,-, death 1,2,3
RateTable hand_rates3() {
  RateTable r;
  r.N = 3;
  r.birth = {0.0, 2.0, 1.0, 0.0};
  r.death = {0.0, 1.0, 2.0, 3.0};
  return r;
}

}  // namespace

TEST_CASE("ladder sequences of the hand example") {
  const LadderSequences L = ladders(hand_rates3());
  CHECK(L.log_pi[1] == 0.0);
  CHECK(L.log_rho[1] == 0.0);
  CHECK(std::exp(L.log_pi[2]) == doctest::Approx(1.0));        // 2/2
  CHECK(std::exp(L.log_pi[3]) == doctest::Approx(1.0 / 3.0));  // 2*1/(2*3)
  CHECK(std::exp(L.log_rho[2]) == doctest::Approx(2.0));       // 2/1
  CHECK(std::exp(L.log_rho[3]) == doctest::Approx(1.0));       // 2*1/(1*2)
}

TEST_CASE("degenerate rate tables are rejected") {
  RateTable r = hand_rates3();
  r.birth[2] = 0.0;
  CHECK_THROWS_AS(ladders(r), DegenerateRates);
  RateTable r2 = hand_rates3();
  r2.death[3] = 0.0;
  CHECK_THROWS_AS(ladders(r2), DegenerateRates);
}

TEST_CASE("ladder ratio identity against direct products in extended precision") {
  const ModelParams p{100, 2.0, 1.0, 1.0, 1.0};
  const RateTable r = rates(p);
  const LadderSequences L = ladders(r);
  // rho_n / pi_n = death_n / death_1
  for (int n = 1; n <= p.N; ++n) {
    const double lhs = L.log_rho[std::size_t(n)] - L.log_pi[std::size_t(n)];
    const double rhs = std::log(r.death[std::size_t(n)] / r.death[1]);
    CHECK(std::abs(lhs - rhs) <= 1e-11);
  }
  // and the running sums match direct long double products
  long double pi = 1.0L, rho = 1.0L;
  for (int n = 2; n <= 40; ++n) {
    pi *= static_cast<long double>(r.birth[std::size_t(n - 1)]) / r.death[std::size_t(n)];
    rho *= static_cast<long double>(r.birth[std::size_t(n - 1)]) / r.death[std::size_t(n - 1)];
    CHECK(L.log_pi[std::size_t(n)] ==
          doctest::Approx(static_cast<double>(std::log(pi))).epsilon(1e-12));
    CHECK(L.log_rho[std::size_t(n)] ==
          doctest::Approx(static_cast<double>(std::log(rho))).epsilon(1e-12));
  }
}

TEST_CASE("auxiliary stationary laws of the hand example") {
  const LadderSequences L = ladders(hand_rates3());
  const ProbVector p0 = aux_stationary0(L);
  CHECK(p0.prob(1) == doctest::Approx(3.0 / 7.0));
  CHECK(p0.prob(2) == doctest::Approx(3.0 / 7.0));
  CHECK(p0.prob(3) == doctest::Approx(1.0 / 7.0));
  const ProbVector p1 = aux_stationary1(L);
  CHECK(p1.prob(1) == doctest::Approx(1.0 / 4.0));
  CHECK(p1.prob(2) == doctest::Approx(1.0 / 2.0));
  CHECK(p1.prob(3) == doctest::Approx(1.0 / 4.0));
}

TEST_CASE("single-state ladders give a point mass") {
  RateTable r;
  r.N = 1;
  r.birth = {0.0, 0.0};
  r.death = {0.0, 1.0};
  const LadderSequences L = ladders(r);
  CHECK(aux_stationary0(L).prob(1) == doctest::Approx(1.0));
  CHECK(aux_stationary1(L).prob(1) == doctest::Approx(1.0));
}

TEST_CASE("detailed balance of both auxiliary laws") {
  const ModelParams p{100, 2.0, 1.0, 1.0, 1.0};
  const RateTable r = rates(p);
  const LadderSequences L = ladders(r);
  const ProbVector p0 = aux_stationary0(L);
  const ProbVector p1 = aux_stationary1(L);
  for (int n = 2; n <= p.N; ++n) {
    const double f0 = r.death[std::size_t(n)] * p0.prob(n) /
                      (r.birth[std::size_t(n - 1)] * p0.prob(n - 1));
    CHECK(std::abs(f0 - 1.0) <= 1e-10);
    // the immortal-individual process dies at rate death[n-1] in state n
    const double f1 = r.death[std::size_t(n - 1)] * p1.prob(n) /
                      (r.birth[std::size_t(n - 1)] * p1.prob(n - 1));
    CHECK(std::abs(f1 - 1.0) <= 1e-10);
  }
}

TEST_CASE("restart map of a two-state chain at a point mass") {
  RateTable r;
  r.N = 2;
  r.birth = {0.0, 1.0, 0.0};
  r.death = {0.0, 1.0, 1.0};
  const LadderSequences L = ladders(r);
  const ProbVector out = restart_map(ProbVector::point_mass(2, 1), L);
  CHECK(out.prob(1) == doctest::Approx(0.5));
  CHECK(out.prob(2) == doctest::Approx(0.5));
}

TEST_CASE("restart map matches a dense stationary solve of the restarted chain") {
  // the restarted process jumps from state 1 to state j at rate death[1]*nu_j
  // instead of dying; its stationary law is the restart map's value at nu
  const auto dense_restart_stationary = [](const RateTable& r,
                                           const ProbVector& nu) {
    const int N = r.N;
    // rows of the transposed generator, last equation replaced by sum = 1
    std::vector<std::vector<double>> A(static_cast<std::size_t>(N),
                                       std::vector<double>(static_cast<std::size_t>(N) + 1, 0.0));
    for (int n = 1; n <= N; ++n) {
      const std::size_t j = static_cast<std::size_t>(n - 1);
      A[j][j] -= r.birth[static_cast<std::size_t>(n)] + r.death[static_cast<std::size_t>(n)];
      if (n < N) A[static_cast<std::size_t>(n)][j] += r.birth[static_cast<std::size_t>(n)];
      if (n > 1) A[static_cast<std::size_t>(n - 2)][j] += r.death[static_cast<std::size_t>(n)];
    }
    for (int j = 1; j <= N; ++j)  // restart jump out of state 1
      A[static_cast<std::size_t>(j - 1)][0] += r.death[1] * nu.prob(j);
    for (std::size_t j = 0; j < static_cast<std::size_t>(N); ++j) {
      A[static_cast<std::size_t>(N - 1)][j] = 1.0;
    }
    A[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(N)] = 1.0;
    // Gaussian elimination with partial pivoting
    for (std::size_t col = 0; col < static_cast<std::size_t>(N); ++col) {
      std::size_t piv = col;
      for (std::size_t row = col + 1; row < static_cast<std::size_t>(N); ++row)
        if (std::abs(A[row][col]) > std::abs(A[piv][col])) piv = row;
      std::swap(A[col], A[piv]);
      for (std::size_t row = col + 1; row < static_cast<std::size_t>(N); ++row) {
        const double f = A[row][col] / A[col][col];
        for (std::size_t k = col; k <= static_cast<std::size_t>(N); ++k)
          A[row][k] -= f * A[col][k];
      }
    }
    std::vector<double> x(static_cast<std::size_t>(N));
    for (int row = N - 1; row >= 0; --row) {
      double acc = A[static_cast<std::size_t>(row)][static_cast<std::size_t>(N)];
      for (std::size_t k = static_cast<std::size_t>(row) + 1; k < static_cast<std::size_t>(N); ++k)
        acc -= A[static_cast<std::size_t>(row)][k] * x[k];
      x[static_cast<std::size_t>(row)] = acc / A[static_cast<std::size_t>(row)][static_cast<std::size_t>(row)];
    }
    std::vector<double> by_state(static_cast<std::size_t>(N) + 1, 0.0);
    for (int n = 1; n <= N; ++n) by_state[static_cast<std::size_t>(n)] = x[static_cast<std::size_t>(n - 1)];
    return ProbVector::from_weights(by_state);
  };

  for (double R0 : {0.7, 2.0, 6.0}) {
    const ModelParams p{9, R0, 1.0, 1.0, 2.0};
    const RateTable r = rates(p);
    const LadderSequences L = ladders(r);
    const std::vector<ProbVector> nus{
        ProbVector::point_mass(9, 1), ProbVector::point_mass(9, 9),
        ProbVector::from_weights({0.0, 1, 2, 3, 4, 5, 4, 3, 2, 1}),
        aux_stationary1(L)};
    for (const ProbVector& nu : nus) {
      const ProbVector via_map = restart_map(nu, L);
      const ProbVector via_dense = dense_restart_stationary(r, nu);
      CAPTURE(R0);
      CHECK(tv_distance(via_map, via_dense) <= 1e-12);
    }
  }
}

TEST_CASE("restart map output is a normalized distribution") {
  const ModelParams p{100, 2.0, 1.0, 1.0, 1.0};
  const LadderSequences L = ladders(rates(p));
  const ProbVector out = restart_map(aux_stationary0(L), L);
  CHECK(std::abs(out.log_norm_defect()) <= 1e-12);
  const double tv = tv_distance(out, aux_stationary0(L));
  CHECK(tv >= 0.0);
  CHECK(tv < 1.0);
}

TEST_CASE("solved QSD is a fixed point of the restart map") {
  for (double R0 : {0.5, 2.0}) {
    const ModelParams p{100, R0, 1.0, 1.0, 1.0};
    const QsdResult res = solve_qsd(p);
    CHECK(res.residual <= kDefaultQsdTol);
    const ProbVector mapped = restart_map(res.q, ladders(rates(p)));
    CHECK(tv_distance(mapped, res.q) <= 10.0 * kDefaultQsdTol);
    CHECK(std::abs(res.q.log_norm_defect()) <= 1e-12);
  }
}

TEST_CASE("q1 reference values at R0 = 2, alpha = 1") {
  const QsdResult a = solve_qsd({100, 2.0, 1.0, 1.0, 1.0});
  CHECK(a.q1 == doctest::Approx(1.30e-5).epsilon(5e-3));
  const QsdResult b = solve_qsd({400, 2.0, 1.0, 1.0, 4.0});
  CHECK(b.q1 == doctest::Approx(0.264e-72).epsilon(5e-3));
}

TEST_CASE("three-state QSD equals the frozen eigen solution") {
  // principal left eigenvector of the killed generator, precomputed at
  // 40-digit precision for N=3, R0=2, alpha=0, mu=1, s=1
  const ModelParams p{3, 2.0, 0.0, 1.0, 1.0};
  const QsdResult res = solve_qsd(p, 1e-15, 10000);
  CHECK(res.q.prob(1) == doctest::Approx(0.406738934572442894).epsilon(1e-11));
  CHECK(res.q.prob(2) == doctest::Approx(0.391810476552620386).epsilon(1e-11));
  CHECK(res.q.prob(3) == doctest::Approx(0.201450588874936720).epsilon(1e-11));
  CHECK(tv_distance(res.q, qsd_oracle_small(p)) <= 1e-10);
}

TEST_CASE("solver throws when the iteration budget is too small") {
  CHECK_THROWS_AS(solve_qsd({100, 0.5, 1.0, 1.0, 1.0}, 1e-13, 3), NoConvergence);
  CHECK_THROWS_AS(solve_qsd({100, 2.0, 1.0, 1.0, 1.0}, 0.0, 100), ValidityError);
  CHECK_THROWS_AS(solve_qsd({100, 2.0, 1.0, 1.0, 1.0}, 1e-13, 0), ValidityError);
}

TEST_CASE("reference solver handles the trivial and guarded cases") {
  const ProbVector q1 = qsd_oracle_small({1, 2.0, 1.0, 1.0, 1.0});
  CHECK(q1.states() == 1);
  CHECK(q1.prob(1) == doctest::Approx(1.0));
  CHECK_THROWS_AS(qsd_oracle_small({51, 2.0, 1.0, 1.0, 1.0}), ValidityError);
}

TEST_CASE("reference solver satisfies the stationarity equation per state") {
  const ModelParams p{30, 10.0, 1.0, 1.0, 3.5};
  const RateTable r = rates(p);
  const ProbVector q = qsd_oracle_small(p, 1e-13);
  const double kill = r.death[1] * q.prob(1);
  for (int n = 1; n <= p.N; ++n) {
    double res = -(r.birth[std::size_t(n)] + r.death[std::size_t(n)]) * q.prob(n) +
                 kill * q.prob(n);
    if (n > 1) res += r.birth[std::size_t(n - 1)] * q.prob(n - 1);
    if (n < p.N) res += r.death[std::size_t(n + 1)] * q.prob(n + 1);
    CHECK(std::abs(res) <= 1e-10);
  }
}

TEST_CASE("restart solver and reference solver agree across a small grid") {
  for (int N : {2, 5, 13, 30})
    for (double R0 : {0.5, 2.0, 10.0})
      for (double alpha : {0.0, 1.0})
        for (double s : {1.0, 2.0, 3.5}) {
          const ModelParams p{N, R0, alpha, 1.0, s};
          const double tv = tv_distance(solve_qsd(p).q, qsd_oracle_small(p));
          CAPTURE(N);
          CAPTURE(R0);
          CAPTURE(alpha);
          CAPTURE(s);
          CHECK(tv <= 1e-9);
        }
}

TEST_CASE("log q1 roughly doubles when N doubles (R0 = 2, alpha = 1)") {
  for (int s = 1; s <= 4; ++s) {
    double lq[3];
    int i = 0;
    for (int N : {100, 200, 400})
      lq[i++] = solve_qsd({N, 2.0, 1.0, 1.0, double(s)}).q.logp(1);
    const double r1 = lq[1] / lq[0];
    const double r2 = lq[2] / lq[1];
    CHECK(r1 >= 1.8);
    CHECK(r1 <= 2.2);
    CHECK(r2 >= 1.8);
    CHECK(r2 <= 2.2);
  }
}

TEST_CASE("QSD does not depend on the time scale mu") {
  const QsdResult ref = solve_qsd({80, 2.0, 1.0, 1.0, 2.0});
  for (double mu : {0.5, 2.0}) {
    const QsdResult other = solve_qsd({80, 2.0, 1.0, mu, 2.0});
    for (int n = 1; n <= 80; ++n)
      CHECK(std::abs(ref.q.prob(n) - other.q.prob(n)) <= 1e-13);
  }
}

TEST_CASE("probability vectors reject unnormalized input") {
  std::vector<double> bad{-kInf, std::log(0.5), std::log(0.6)};
  CHECK_THROWS_AS(ProbVector{bad}, ValidityError);
  const ProbVector ok = ProbVector::from_weights({0.0, 0.5, 0.6});
  CHECK(ok.prob(1) == doctest::Approx(0.5 / 1.1));
  CHECK_THROWS_AS(ProbVector::from_weights({0.0, 0.0, 0.0}), ValidityError);
  CHECK_THROWS_AS(ProbVector::from_weights({0.0, 1.0, -0.5}), ValidityError);
}
