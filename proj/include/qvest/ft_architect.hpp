#pragma once

#include <cstdint>
#include <vector>

#include "qvest/distillation.hpp"
#include "qvest/metrics.hpp"
#include "qvest/surface_code.hpp"
#include "qvest/synthesis.hpp"

namespace qvest {

inline constexpr double kDefaultAncillaFactor = 1.5;

/// Split of the physical qubits into a Data Block (logical qubits plus
/// routing ancillas) and a Distillation Block of n_D qubits.
struct ArchitectureLayout {
  std::int64_t n_max = 1;
  std::int64_t n_D = 0;
  int d_c = 1;
  double ancilla_factor = kDefaultAncillaFactor;
  std::int64_t n_L = 0;
};

/// floor((n_max - n_D) / (ancilla_factor * (2 d_c - 1)^2)), 0 if nothing fits.
std::int64_t logical_qubits(const ArchitectureLayout& layout);

struct FtOptions {
  double ancilla_factor = kDefaultAncillaFactor;
  /// Connectivity exponent applied at the logical level. Zero matches the
  /// nearest-neighbour Data Block implied by the ancilla factor.
  double logical_connectivity = 0.0;
  SynthesisModel synthesis;
  double success_threshold = kDefaultSuccessThreshold;
};

struct FtOptimum {
  ArchitectureLayout layout;
  double eps_L = 0.0;
  double eps_T = 0.0;
  double eps_P = 0.0;
  double eps_eff = 0.0;
  MetricEstimate metric;
  bool beats_unencoded = false;
  bool unencoded = false;            // physical gates, no QEC
  bool synthesis_dominated = false;  // optimal eps_P hit 1, 0.5 used
  int distillation_levels = 0;
  int factory_distance = 0;
};

/// Scores one (d_c, n_D) split. The (d_c = 1, n_D = 0) layout is the
/// unencoded machine: eps_eff = eps, every physical qubit usable, no T
/// synthesis. beats_unencoded is left false; optimize_ft() sets it.
FtOptimum evaluate_architecture(const ArchitectureLayout& layout, double eps,
                                double eps_th, const DistillationModel& model,
                                int k, const FtOptions& options = {});

/// Every layout optimize_ft() scores, in search order: the unencoded
/// machine first, then d_c ascending and n_D ascending within each d_c.
std::vector<FtOptimum> ft_candidates(int k, std::int64_t n_max, double eps,
                                     double eps_th,
                                     const DistillationModel& model = {},
                                     const FtOptions& options = {});

/// Exhaustive search over d_c in [1, max_code_distance(n_max)] and n_D in
/// {0} plus every distillation level cost that fits. Ties go to the smaller
/// d_c, then the smaller n_D, so the unencoded machine wins any tie.
FtOptimum optimize_ft(int k, std::int64_t n_max, double eps, double eps_th,
                      const DistillationModel& model = {},
                      const FtOptions& options = {});

}  // namespace qvest
