#pragma once

#include <cstdint>

namespace qvest {

/// Independent per-qubit Bernoulli errors with probability eps_eff on each
/// of n qubits in every circuit layer.
struct TrialConfig {
  std::int64_t n = 1;
  double eps_eff = 1e-3;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
  int threads = 0;  // 0: hardware concurrency

  void validate() const;
};

struct DepthStatistics {
  double mean_depth = 0.0;
  double std_error = 0.0;
};

/// 1 - (1 - eps)^n, the probability that a layer contains an error.
double layer_failure_probability(std::int64_t n, double eps_eff);
/// Mean of the geometric layers-until-first-error distribution.
double exact_mean_depth(std::int64_t n, double eps_eff);

/// Layers up to and including the first one containing an error, averaged
/// over cfg.trials. Requires eps_eff > 0. Bit-identical for a fixed seed on
/// any thread count.
DepthStatistics simulate_depth_to_first_error(const TrialConfig& cfg);

/// Fraction of depth-1 circuits with at least one error.
double single_step_error_rate(const TrialConfig& cfg);

}  // namespace qvest
