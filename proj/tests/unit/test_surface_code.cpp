#include <doctest.h>

#include <cmath>

#include "qvest/error.hpp"
#include "qvest/surface_code.hpp"

using namespace qvest;

TEST_CASE("qubits per logical patch") {
  CHECK(qubits_per_logical(1) == 1);
  CHECK(qubits_per_logical(3) == 25);
  CHECK(qubits_per_logical(5) == 81);
  CHECK_THROWS_AS(qubits_per_logical(0), InvalidParameter);
}

TEST_CASE("logical error examples") {
  for (int d = 1; d <= 50; ++d) {
    CHECK(logical_error(0.01, {d, 0.01}) == 0.01);
  }
  CHECK(logical_error(1e-3, {3}) == doctest::Approx(1e-4).epsilon(1e-12));
  CHECK(logical_error(1e-3, {7}) == doctest::Approx(1e-6).epsilon(1e-12));
  CHECK(logical_error(3e-3, {1}) == 3e-3);
}

TEST_CASE("logical error threshold semantics") {
  for (int d = 1; d <= 25; ++d) {
    for (double eps : {1e-5, 1e-3, 9e-3, 0.011, 0.05, 0.3}) {
      const double l = logical_error(eps, {d});
      if (d == 1) {
        CHECK(l == eps);
        continue;
      }
      CHECK((l < eps) == (eps < 0.01));
      CHECK((l > eps) == (eps > 0.01));
    }
  }
}

TEST_CASE("logical error is floored instead of underflowing") {
  const double l = logical_error(1e-9, {201});
  CHECK(l > 0.0);
  CHECK(std::isnormal(l));
}

TEST_CASE("correctable errors") {
  CHECK(SurfaceCodeConfig{1}.correctable_errors() == 0);
  CHECK(SurfaceCodeConfig{3}.correctable_errors() == 1);
  CHECK(SurfaceCodeConfig{4}.correctable_errors() == 1);
  CHECK(SurfaceCodeConfig{7}.correctable_errors() == 3);
  CHECK_THROWS_AS(SurfaceCodeConfig{0}.validate(), InvalidParameter);
}

TEST_CASE("largest code distance that fits") {
  CHECK(max_code_distance(1) == 1);
  CHECK(max_code_distance(25) == 3);
  CHECK(max_code_distance(10'000) == 50);
  CHECK(max_code_distance(24) == 2);
  for (std::int64_t n = 1; n < 5000; n += 13) {
    const int d = max_code_distance(n);
    CHECK(qubits_per_logical(d) <= n);
    CHECK(qubits_per_logical(d + 1) > n);
  }
}

TEST_CASE("naive QEC examples") {
  const auto small = optimize_naive_qec(1, 25, 1e-3);
  CHECK(small.best_distance == 1);
  CHECK(small.metric.value == 25.0);

  for (std::int64_t n : {100, 10'000, 1'000'000}) {
    CHECK(optimize_naive_qec(1, n, 0.01).best_distance == 1);
  }
}

TEST_CASE("naive QEC stair-step is monotone") {
  for (double eps : {1e-3, 1e-4}) {
    double previous_value = 0.0;
    int previous_d = 1;
    for (double x = 1.0; x <= 6.0; x += 0.02) {
      const auto n = static_cast<std::int64_t>(std::pow(10.0, x));
      const auto r = optimize_naive_qec(1, n, eps);
      CHECK(r.metric.value >= previous_value);
      CHECK(r.best_distance >= previous_d);
      CHECK(r.logical_qubits >= 1);
      CHECK(r.logical_qubits * qubits_per_logical(r.best_distance) <= n);
      CHECK(r.best_distance <= max_code_distance(n));
      previous_value = r.metric.value;
      previous_d = r.best_distance;
    }
  }
}

TEST_CASE("naive QEC matches an exhaustive re-scan") {
  for (std::int64_t n : {30, 500, 7000, 90'000}) {
    const auto r = optimize_naive_qec(2, n, 1e-3);
    double best = -1.0;
    int best_d = 0;
    for (int d = 1; (2 * d - 1) * (2 * d - 1) <= n; ++d) {
      const std::int64_t n_l = n / ((2 * d - 1) * (2 * d - 1));
      const double e = d == 1 ? 1e-3 : 0.01 * std::pow(0.1, (d + 1) / 2.0);
      const double v = std::min(static_cast<double>(n_l), std::pow(e, -1.0 / 3.0));
      if (v > best) {
        best = v;
        best_d = d;
      }
    }
    CHECK(r.best_distance == best_d);
    CHECK(r.metric.value == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("logical error above threshold saturates at 1") {
  CHECK(logical_error(0.02, {41}) == 1.0);
  CHECK(logical_error(0.5, {5}) == 1.0);
}
