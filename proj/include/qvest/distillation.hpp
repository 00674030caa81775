#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qvest/surface_code.hpp"

namespace qvest {

/// How the code distance of the distillation factories is chosen.
enum class FactoryDistancePolicy {
  /// max(data distance, smallest distance whose logical error does not
  /// exceed the level's output error). Falls back to the data distance when
  /// no distance helps (eps >= threshold).
  Matched,
  /// Same distance as the data block.
  TiedToData,
  /// DistillationModel::fixed_distance for every level.
  Fixed,
};

std::string_view to_string(FactoryDistancePolicy policy);
FactoryDistancePolicy factory_policy_from_string(std::string_view name);

/// Recursive r-to-1 distillation: each level consumes `inputs_per_output`
/// states and maps an input error e to coefficient * e^exponent. The
/// default is 15-to-1 (35 e^3). A level-l factory occupies
/// footprint_factor * r^l * (2 d_f - 1)^2 physical qubits.
struct DistillationModel {
  double footprint_factor = 1.0;
  int inputs_per_output = 15;
  double output_coefficient = 35.0;
  int output_exponent = 3;
  std::optional<double> injection_error;  // unset: physical error rate
  FactoryDistancePolicy distance_policy = FactoryDistancePolicy::Matched;
  int fixed_distance = 1;

  void validate() const;
  /// Stable identifier of every parameter that changes results.
  std::string version() const;
};

struct DistillationOutcome {
  int levels = 0;
  std::int64_t qubits_used = 0;
  double eps_T = 0.0;
  int factory_distance = 0;  // 0 when no factory is built
};

/// Error of the raw injected magic state.
double injected_error(double eps, const DistillationModel& model);

/// Output error after `level` rounds (level 0 is the injected state).
double level_output_error(int level, double eps,
                          const DistillationModel& model);

/// Deepest level that still lowers the error and stays a normal double.
/// Zero when distillation does not converge for this input error.
int useful_levels(double eps, const DistillationModel& model);

int factory_distance(int level, double eps, const SurfaceCodeConfig& data_code,
                     const DistillationModel& model);

/// Physical qubits of a level-`level` factory (0 for level 0). Saturates at
/// INT64_MAX.
std::int64_t level_cost(int level, double eps,
                        const SurfaceCodeConfig& data_code,
                        const DistillationModel& model);

/// Deepest affordable useful level within `budget` qubits.
DistillationOutcome distill(std::int64_t budget, double eps,
                            const SurfaceCodeConfig& data_code,
                            const DistillationModel& model = {});

/// Smallest budget whose distill() outcome reaches eps_T <= target.
/// Throws UnachievableTarget if no level gets there.
std::int64_t required_budget(double target, double eps,
                             const SurfaceCodeConfig& data_code,
                             const DistillationModel& model = {});

/// Costs of every useful level that fits in n_max, ascending. These are the
/// only block sizes where eps_T changes.
std::vector<std::int64_t> level_costs(std::int64_t n_max, double eps,
                                      const SurfaceCodeConfig& data_code,
                                      const DistillationModel& model = {});

}  // namespace qvest
