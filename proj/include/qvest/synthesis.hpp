#pragma once

namespace qvest {

/// Physical gate errors: eps_1 for an arbitrary single-qubit SU(2) gate,
/// eps_2 for the native entangling gate.
struct PhysicalErrorBudget {
  double eps_1 = 0.0;
  double eps_2 = 0.0;

  void validate() const;
};

/// Counting constants of the fault-tolerant decomposition.
struct SynthesisModel {
  /// Single-qubit rotations per qubit per SU(4) step (nine per pair).
  double rotations_per_qubit_step = 4.5;
  /// T gates per bit of rotation precision.
  double t_per_precision_bit = 3.0;
};

/// Connected-pair SU(4) error 1 - (1 - eps_1)^7 (1 - eps_2)^3, evaluated in
/// product form.
double su4_error(const PhysicalErrorBudget& budget);

/// T gates needed to approximate one rotation to precision eps_P.
double t_count(double eps_P, const SynthesisModel& model = {});

/// Per-qubit per-step error of fault-tolerant SU(4) layers:
/// r * eps_P + r * t * log2(1/eps_P) * eps_T + eps_L. Not clamped.
double ft_effective_error(double eps_P, double eps_T, double eps_L,
                          const SynthesisModel& model = {});

struct Precision {
  double eps_P = 0.0;
  bool clamped = false;  // analytic optimum was >= 1
};

/// Minimiser of the rotation and T terms: eps_P = t * eps_T / ln 2,
/// clamped to 1.
Precision optimal_precision(double eps_T, const SynthesisModel& model = {});

struct SynthesisPlan {
  double eps_P = 0.0;
  double eps_T = 0.0;
  double t_count_per_rotation = 0.0;
  double eps_L = 0.0;
  double eps_eff = 0.0;
  bool clamped = false;  // eps_P or eps_eff hit a bound
};

/// Chooses the optimal precision for eps_T and evaluates the resulting
/// effective error, clamped to 1.
SynthesisPlan plan_synthesis(double eps_T, double eps_L,
                             const SynthesisModel& model = {});

}  // namespace qvest
