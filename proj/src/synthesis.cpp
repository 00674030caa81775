#include "qvest/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qvest/error.hpp"

namespace qvest {

namespace {

void check_unit(const char* name, double v, bool allow_zero, bool allow_one) {
  const bool low_ok = allow_zero ? v >= 0.0 : v > 0.0;
  const bool high_ok = allow_one ? v <= 1.0 : v < 1.0;
  if (!(low_ok && high_ok)) {
    throw InvalidParameter(std::string(name) + " out of range: " +
                           std::to_string(v));
  }
}

void check_model(const SynthesisModel& model) {
  if (!(model.rotations_per_qubit_step > 0.0) ||
      !(model.t_per_precision_bit > 0.0)) {
    throw InvalidParameter("synthesis model constants must be positive");
  }
}

}  // namespace

void PhysicalErrorBudget::validate() const {
  check_unit("eps_1", eps_1, true, false);
  check_unit("eps_2", eps_2, true, false);
}

double su4_error(const PhysicalErrorBudget& budget) {
  budget.validate();
  return 1.0 - std::pow(1.0 - budget.eps_1, 7) * std::pow(1.0 - budget.eps_2, 3);
}

double t_count(double eps_P, const SynthesisModel& model) {
  check_unit("eps_P", eps_P, false, true);
  check_model(model);
  if (eps_P == 1.0) return 0.0;
  return -model.t_per_precision_bit * std::log2(eps_P);
}

double ft_effective_error(double eps_P, double eps_T, double eps_L,
                          const SynthesisModel& model) {
  check_unit("eps_P", eps_P, false, true);
  check_unit("eps_T", eps_T, true, true);
  check_unit("eps_L", eps_L, true, true);
  const double r = model.rotations_per_qubit_step;
  return r * eps_P + r * t_count(eps_P, model) * eps_T + eps_L;
}

Precision optimal_precision(double eps_T, const SynthesisModel& model) {
  check_unit("eps_T", eps_T, false, false);
  check_model(model);
  const double p = model.t_per_precision_bit * eps_T / std::numbers::ln2;
  if (p >= 1.0) return {1.0, true};
  return {p, false};
}

SynthesisPlan plan_synthesis(double eps_T, double eps_L,
                             const SynthesisModel& model) {
  const Precision precision = optimal_precision(eps_T, model);
  SynthesisPlan plan;
  plan.eps_P = precision.eps_P;
  plan.eps_T = eps_T;
  plan.eps_L = eps_L;
  plan.t_count_per_rotation = t_count(plan.eps_P, model);
  const double raw = ft_effective_error(plan.eps_P, eps_T, eps_L, model);
  plan.eps_eff = std::min(1.0, raw);
  plan.clamped = precision.clamped || raw > 1.0;
  return plan;
}

}  // namespace qvest
