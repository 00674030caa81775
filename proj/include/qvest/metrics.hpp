#pragma once

#include <cstdint>
#include <string_view>

namespace qvest {

/// Survival probability that defines a "successful" circuit depth. At e^-1
/// the achievable depth is exactly 1 / (n * eps_eff).
inline constexpr double kDefaultSuccessThreshold = 0.36787944117144233;

/// Largest n_max accepted by the exhaustive scan.
inline constexpr std::int64_t kBruteForceLimit = 1'000'000;

enum class Regime { QubitLimited, ErrorLimited };

std::string_view to_string(Regime regime);

struct MetricQuery {
  int k = 1;                 // volumetric class: depth must scale as n^k
  std::int64_t n_max = 1;    // available qubits
  double eps_eff = 1e-3;     // effective error per qubit per step
  double success_threshold = kDefaultSuccessThreshold;

  void validate() const;
};

struct MetricEstimate {
  double value = 0.0;
  Regime regime = Regime::ErrorLimited;
  double n_opt = 0.0;           // crossover between the two regimes
  double depth_at_value = 0.0;  // achievable depth at `width`
  double width = 0.0;           // circuit width the value is attained at
};

/// ln(1/threshold), exactly 1 at the default threshold.
double depth_budget(double success_threshold);

/// Largest depth that survives with probability >= success_threshold.
double achievable_depth(std::int64_t n, double eps_eff,
                        double success_threshold = kDefaultSuccessThreshold);

/// Width where n and d(n)^(1/k) cross, with eps_eff(n) = n^m * eps.
double crossover_width(int k, double eps, double m,
                       double success_threshold = kDefaultSuccessThreshold);

/// QV-k = min(n_max, eps^(-1/(k+m+1))). With m = 0 `q.eps_eff` is taken as
/// the effective error already; with m > 0 it is the connected-pair error
/// and routing cost grows as n^m.
MetricEstimate qv_closed_form(const MetricQuery& q, double m = 0.0);

/// Literal argmax over every integer width in [1, n_max]. Ties go to the
/// smallest width. Used as the oracle for qv_closed_form.
MetricEstimate qv_brute_force(const MetricQuery& q, double m = 0.0);

}  // namespace qvest
