#include "qvest/surface_code.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qvest/error.hpp"

namespace qvest {

void SurfaceCodeConfig::validate() const {
  if (distance < 1) {
    throw InvalidParameter("code distance must be >= 1, got " +
                           std::to_string(distance));
  }
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw InvalidParameter("code threshold must lie in (0, 1), got " +
                           std::to_string(threshold));
  }
}

std::int64_t qubits_per_logical(int distance) {
  if (distance < 1) {
    throw InvalidParameter("code distance must be >= 1, got " +
                           std::to_string(distance));
  }
  const std::int64_t side = 2 * static_cast<std::int64_t>(distance) - 1;
  return side * side;
}

double logical_error(double eps, const SurfaceCodeConfig& code) {
  code.validate();
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw InvalidParameter("physical error must lie in (0, 1], got " +
                           std::to_string(eps));
  }
  if (code.distance == 1) return eps;
  const double exponent = (code.distance + 1) / 2.0;
  const double value = code.threshold * std::pow(eps / code.threshold, exponent);
  return std::clamp(value, std::numeric_limits<double>::min(), 1.0);
}

int max_code_distance(std::int64_t n_max) {
  if (n_max < 1) return 1;
  auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n_max)));
  while (root * root > n_max) --root;
  while ((root + 1) * (root + 1) <= n_max) ++root;
  return static_cast<int>(std::max<std::int64_t>(1, (root + 1) / 2));
}

NaiveQecResult optimize_naive_qec(int k, std::int64_t n_max, double eps,
                                  double eps_th) {
  if (n_max < 1) {
    throw InvalidParameter("n_max must be >= 1, got " + std::to_string(n_max));
  }
  NaiveQecResult best;
  bool have_best = false;
  const int d_max = max_code_distance(n_max);
  for (int d = 1; d <= d_max; ++d) {
    const std::int64_t n_logical = n_max / qubits_per_logical(d);
    if (n_logical < 1) break;
    const double eps_logical = logical_error(eps, {d, eps_th});
    const MetricEstimate metric =
        qv_closed_form(MetricQuery{k, n_logical, eps_logical});
    if (!have_best || metric.value > best.metric.value) {
      best = {d, n_logical, eps_logical, metric};
      have_best = true;
    }
  }
  return best;
}

}  // namespace qvest
