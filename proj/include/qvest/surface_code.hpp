#pragma once

#include <cstdint>

#include "qvest/metrics.hpp"

namespace qvest {

inline constexpr double kDefaultCodeThreshold = 0.01;

struct SurfaceCodeConfig {
  int distance = 1;
  double threshold = kDefaultCodeThreshold;

  /// floor((d - 1) / 2)
  int correctable_errors() const { return (distance - 1) / 2; }
  void validate() const;
};

/// Physical qubits per logical qubit, (2d - 1)^2.
std::int64_t qubits_per_logical(int distance);

/// eps_th * (eps / eps_th)^((d + 1) / 2); returns eps unchanged for d = 1.
/// Clamped to [smallest normal double, 1] so it stays a usable probability.
double logical_error(double eps, const SurfaceCodeConfig& code);

/// floor((sqrt(n_max) + 1) / 2), the largest distance whose patch fits.
int max_code_distance(std::int64_t n_max);

struct NaiveQecResult {
  int best_distance = 1;
  std::int64_t logical_qubits = 1;
  double logical_error = 0.0;
  MetricEstimate metric;
};

/// Scans every distance in [1, max_code_distance(n_max)], trading logical
/// qubit count for logical error, and keeps the best QV-k. Ties go to the
/// smaller distance. Ignores fault-tolerant gate overhead.
NaiveQecResult optimize_naive_qec(int k, std::int64_t n_max, double eps,
                                  double eps_th = kDefaultCodeThreshold);

}  // namespace qvest
