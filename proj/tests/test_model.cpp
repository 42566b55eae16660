#include "pll/model.hpp"

#include <cmath>

#include "doctest.h"
#include "pll/errors.hpp"

using namespace pll;

namespace {

double rel(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace

TEST_CASE("rates at the midpoint and the boundary states") {
  const ModelParams p{100, 2.0, 1.0, 1.0, 1.0};
  const RateTable r = rates(p);
  CHECK(r.birth[50] == doctest::Approx(50.0));   // 2*(1-0.5)*50
  CHECK(r.death[50] == doctest::Approx(75.0));   // (1+0.5)*50
  CHECK(r.birth[0] == 0.0);
  CHECK(r.death[0] == 0.0);
  CHECK(r.birth[100] == 0.0);
}

TEST_CASE("birth rates are nonnegative and interior death rates positive") {
  for (double R0 : {0.5, 2.0, 10.0})
    for (double alpha : {0.0, 1.0, 3.0})
      for (double s : {0.2, 1.0, 3.5}) {
        const RateTable r = rates({60, R0, alpha, 1.0, s});
        for (int n = 0; n <= 60; ++n) CHECK(r.birth[std::size_t(n)] >= 0.0);
        for (int n = 1; n <= 60; ++n) CHECK(r.death[std::size_t(n)] > 0.0);
      }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(rates({1, 2.0, 1.0, 1.0, 1.0}), ValidityError);
  CHECK_THROWS_AS(rates({100, 0.0, 1.0, 1.0, 1.0}), ValidityError);
  CHECK_THROWS_AS(rates({100, 2.0, -0.1, 1.0, 1.0}), ValidityError);
  CHECK_THROWS_AS(rates({100, 2.0, 1.0, 0.0, 1.0}), ValidityError);
  CHECK_THROWS_AS(rates({100, 2.0, 1.0, 1.0, 0.0}), ValidityError);
  const ModelParams subcritical{100, 0.9, 1.0, 1.0, 1.0};
  CHECK_THROWS_AS(subcritical.require_supercritical(), ValidityError);
}

TEST_CASE("four-rate reparametrization of the worked point") {
  const BartlettParams q = to_bartlett({100, 2.0, 1.0, 1.0, 1.0});
  CHECK(q.a1 == doctest::Approx(2.0));
  CHECK(q.a2 == doctest::Approx(1.0));
  CHECK(q.b1 == doctest::Approx(0.02));
  CHECK(q.b2 == doctest::Approx(0.01));
  CHECK(q.a == doctest::Approx(1.0));
  CHECK(q.b == doctest::Approx(0.03));
  CHECK(q.c == doctest::Approx(3.0));
  CHECK(q.d == doctest::Approx(0.01));
}

TEST_CASE("alpha = 0 collapses b2, R0 = 1 collapses a") {
  const BartlettParams q0 = to_bartlett({100, 2.0, 0.0, 1.0, 1.0});
  CHECK(q0.b2 == 0.0);
  CHECK(q0.d == q0.b1);
  const BartlettParams q1 = to_bartlett({100, 1.0, 1.0, 1.0, 1.0});
  CHECK(q1.a == doctest::Approx(0.0));
}

TEST_CASE("from_bartlett inverts to_bartlett") {
  const ModelParams p = from_bartlett({2.0, 1.0, 0.02, 0.01, 1.0}, 100);
  CHECK(p.N == 100);
  CHECK(p.R0 == doctest::Approx(2.0));
  CHECK(p.alpha == doctest::Approx(1.0));
  CHECK(p.mu == doctest::Approx(1.0));
  CHECK(p.s == 1.0);

  const ModelParams p0 = from_bartlett({2.0, 1.0, 0.02, 0.0, 1.0}, 100);
  CHECK(p0.alpha == 0.0);

  CHECK_THROWS_AS(from_bartlett({2.0, 1.0, 0.03, 0.01, 1.0}, 100), IntegrityError);
  CHECK_THROWS_AS(from_bartlett({2.0, 1.0, 0.02, -0.01, 1.0}, 100), IntegrityError);
}

TEST_CASE("round trip is the identity over a parameter grid") {
  for (int N : {10, 100, 457})
    for (double R0 : {0.5, 1.0, 2.0, 10.0})
      for (double alpha : {0.0, 0.5, 3.0})
        for (double mu : {0.25, 1.0, 4.0})
          for (double s : {0.2, 1.0, 2.0, 3.5}) {
            const ModelParams p{N, R0, alpha, mu, s};
            const ModelParams back = from_bartlett(to_bartlett(p), N);
            CHECK(back.N == N);
            CHECK(rel(back.R0, R0) <= 1e-12);
            CHECK(rel(back.alpha, alpha) <= 1e-12);
            CHECK(rel(back.mu, mu) <= 1e-12);
            CHECK(rel(back.s, s) <= 1e-12);
          }
}

TEST_CASE("the two rate formulations agree state by state") {
  for (double R0 : {0.5, 2.0, 10.0})
    for (double alpha : {0.0, 1.0})
      for (double s : {1.0, 2.0, 3.5}) {
        const ModelParams p{123, R0, alpha, 1.7, s};
        const RateTable r = rates(p);
        const BartlettParams q = to_bartlett(p);
        for (int n = 0; n <= p.N; ++n) {
          const double ns = n == 0 ? 0.0 : std::exp(q.s * std::log(double(n)));
          const double birth = (q.a1 - q.b1 * ns) * n;
          const double death = (q.a2 + q.b2 * ns) * n;
          if (r.birth[std::size_t(n)] == 0.0)
            CHECK(std::abs(birth) <= 1e-12 * p.mu * p.R0 * p.N);
          else
            CHECK(rel(birth, r.birth[std::size_t(n)]) <= 1e-12);
          CHECK(rel(death, r.death[std::size_t(n)]) <= 1e-12);
        }
      }
}

TEST_CASE("fractional powers of n/N handle the endpoints exactly") {
  CHECK(frac_pow(0, 100, 0.2) == 0.0);
  CHECK(frac_pow(100, 100, 3.7) == 1.0);
  CHECK(frac_pow(50, 100, 2.0) == doctest::Approx(0.25));
}
