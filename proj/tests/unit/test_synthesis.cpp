#include <doctest.h>

#include <cmath>
#include <random>

#include "../oracles.hpp"
#include "qvest/error.hpp"
#include "qvest/synthesis.hpp"

using namespace qvest;

TEST_CASE("su4 error of perfect gates is zero") {
  CHECK(su4_error({0.0, 0.0}) == 0.0);
}

TEST_CASE("su4 error product form") {
  const double e = su4_error({1e-4, 1e-3});
  const double expected = 1.0 - std::pow(1.0 - 1e-4, 7) * std::pow(1.0 - 1e-3, 3);
  CHECK(e == doctest::Approx(expected).epsilon(1e-12));
  CHECK(e == doctest::Approx(3.6949e-3).epsilon(1e-4));
  CHECK(std::abs(e - 3.7e-3) < 1e-5);
}

TEST_CASE("su4 error with eps_1 = eps_2 / 10") {
  const double e = su4_error({1e-3, 1e-2});
  CHECK(e == doctest::Approx(1.0 - std::pow(0.999, 7) * std::pow(0.99, 3)).epsilon(1e-12));
  CHECK(e < 7e-3 + 3e-2);
}

TEST_CASE("su4 error is within the first-order expansion bound") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1e-2);
  for (int i = 0; i < 2000; ++i) {
    const double e1 = u(rng);
    const double e2 = u(rng);
    const double first = 7.0 * e1 + 3.0 * e2;
    CHECK(std::abs(su4_error({e1, e2}) - first) <= 10.0 * first * first);
  }
}

TEST_CASE("su4 error is monotone in each rate") {
  double previous = -1.0;
  for (double e1 = 0.0; e1 < 0.5; e1 += 0.01) {
    const double v = su4_error({e1, 1e-3});
    CHECK(v > previous);
    previous = v;
  }
  previous = -1.0;
  for (double e2 = 0.0; e2 < 0.5; e2 += 0.01) {
    const double v = su4_error({1e-3, e2});
    CHECK(v > previous);
    previous = v;
  }
}

TEST_CASE("su4 error rejects rates outside [0, 1)") {
  CHECK_THROWS_AS(su4_error({-1e-3, 0.0}), InvalidParameter);
  CHECK_THROWS_AS(su4_error({0.0, 1.0}), InvalidParameter);
}

TEST_CASE("t count examples") {
  CHECK(t_count(std::ldexp(1.0, -10)) == doctest::Approx(30.0).epsilon(1e-14));
  CHECK(t_count(1.0) == 0.0);
  CHECK(t_count(0.25) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK_THROWS_AS(t_count(0.0), InvalidParameter);
  CHECK_THROWS_AS(t_count(1.5), InvalidParameter);
}

TEST_CASE("t count is additive over precision products") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-12.0, 0.0);
  for (int i = 0; i < 500; ++i) {
    const double a = std::pow(10.0, u(rng));
    const double b = std::pow(10.0, u(rng));
    CHECK(t_count(a * b) == doctest::Approx(t_count(a) + t_count(b)).epsilon(1e-12));
  }
}

TEST_CASE("fault-tolerant effective error examples") {
  CHECK(ft_effective_error(1e-12, 0.0, 1e-6) ==
        doctest::Approx(1e-6 + 4.5e-12).epsilon(1e-12));
  // 4.5 * 4.33e-6 + 13.5 * log2(1 / 4.33e-6) * 1e-6
  CHECK(ft_effective_error(4.33e-6, 1e-6, 0.0) ==
        doctest::Approx(2.6001722e-4).epsilon(1e-7));
  const double hand = 4.5 * 4.33e-6 + 13.5 * std::log2(1.0 / 4.33e-6) * 1e-6;
  CHECK(ft_effective_error(4.33e-6, 1e-6, 0.0) == doctest::Approx(hand).epsilon(1e-14));
}

TEST_CASE("effective error never drops below the logical error") {
  for (double p : {1e-12, 1e-6, 1e-2, 0.5, 1.0}) {
    CHECK(ft_effective_error(p, 1e-7, 3e-5) >= 3e-5);
  }
}

TEST_CASE("optimal precision examples") {
  const auto p = optimal_precision(1e-6);
  CHECK(p.eps_P == doctest::Approx(4.328e-6).epsilon(1e-3));
  CHECK_FALSE(p.clamped);

  const auto q = optimal_precision(std::log(2.0) / 3.0);
  CHECK(q.eps_P == 1.0);
  const auto r = optimal_precision(0.4);
  CHECK(r.eps_P == 1.0);
  CHECK(r.clamped);
}

TEST_CASE("optimal precision matches a numeric minimiser") {
  for (double eps_T = 1e-10; eps_T <= 1.01e-3; eps_T *= 10.0) {
    const auto f = [&](double log_p) {
      return ft_effective_error(std::exp(log_p), eps_T, 0.0);
    };
    const double numeric = std::exp(oracle::golden_section_minimize(f, std::log(1e-16), 0.0));
    const double analytic = optimal_precision(eps_T).eps_P;
    INFO("eps_T = " << eps_T);
    CHECK(std::abs(numeric - analytic) / analytic < 0.01);
  }
}

TEST_CASE("effective error is convex in the precision") {
  const double eps_T = 1e-6;
  for (double p = 1e-9; p < 0.5; p *= 1.7) {
    const double h = p * 0.1;
    const double second =
        ft_effective_error(p + h, eps_T, 0.0) - 2.0 * ft_effective_error(p, eps_T, 0.0) +
        ft_effective_error(p - h, eps_T, 0.0);
    CHECK(second >= -1e-18);
  }
}

TEST_CASE("synthesis plan") {
  const auto plan = plan_synthesis(1e-6, 1e-5);
  CHECK(plan.eps_P == doctest::Approx(3e-6 / std::log(2.0)).epsilon(1e-14));
  CHECK(plan.t_count_per_rotation == doctest::Approx(-3.0 * std::log2(plan.eps_P)));
  CHECK(plan.eps_eff == doctest::Approx(ft_effective_error(plan.eps_P, 1e-6, 1e-5)));
  CHECK(plan.eps_eff >= plan.eps_L);
  CHECK_FALSE(plan.clamped);

  const auto bad = plan_synthesis(0.3, 0.0);
  CHECK(bad.clamped);
  CHECK(bad.eps_eff <= 1.0);
}
