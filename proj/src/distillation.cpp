#include "qvest/distillation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qvest/error.hpp"
#include "qvest/format.hpp"

namespace qvest {

namespace {

constexpr int kMaxLevels = 64;
constexpr int kMaxFactoryDistance = 1'000'000;
constexpr auto kSaturated = std::numeric_limits<std::int64_t>::max();

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw InvalidParameter("physical error must lie in (0, 1), got " +
                           std::to_string(eps));
  }
}

double next_level(double e, const DistillationModel& model) {
  return model.output_coefficient * std::pow(e, model.output_exponent);
}

// Smallest distance whose logical error is <= target, or nullopt.
std::optional<int> protecting_distance(double eps, double target,
                                       double threshold) {
  if (eps >= threshold || target >= threshold) return std::nullopt;
  auto meets = [&](int d) {
    return logical_error(eps, {d, threshold}) <= target;
  };
  const double ratio =
      std::log(target / threshold) / std::log(eps / threshold);
  double guess = std::ceil(2.0 * ratio - 1.0);
  if (!(guess < kMaxFactoryDistance)) return std::nullopt;
  int d = std::max(1, static_cast<int>(guess));
  while (d > 1 && meets(d - 1)) --d;
  while (!meets(d)) {
    if (++d > kMaxFactoryDistance) return std::nullopt;
  }
  return d;
}

}  // namespace

std::string_view to_string(FactoryDistancePolicy policy) {
  switch (policy) {
    case FactoryDistancePolicy::Matched:
      return "matched";
    case FactoryDistancePolicy::TiedToData:
      return "tied";
    case FactoryDistancePolicy::Fixed:
      return "fixed";
  }
  return "unknown";
}

FactoryDistancePolicy factory_policy_from_string(std::string_view name) {
  if (name == "matched") return FactoryDistancePolicy::Matched;
  if (name == "tied") return FactoryDistancePolicy::TiedToData;
  if (name == "fixed") return FactoryDistancePolicy::Fixed;
  throw InvalidParameter("unknown factory distance policy '" +
                         std::string(name) + "'");
}

void DistillationModel::validate() const {
  if (!(footprint_factor > 0.0) || !std::isfinite(footprint_factor)) {
    throw InvalidParameter("distillation footprint factor must be positive");
  }
  if (inputs_per_output < 2) {
    throw InvalidParameter("distillation needs at least 2 inputs per output");
  }
  if (!(output_coefficient > 0.0) || output_exponent < 2) {
    throw InvalidParameter(
        "distillation recursion needs coefficient > 0 and exponent >= 2");
  }
  if (injection_error && !(*injection_error > 0.0 && *injection_error < 1.0)) {
    throw InvalidParameter("injection error must lie in (0, 1)");
  }
  if (distance_policy == FactoryDistancePolicy::Fixed && fixed_distance < 1) {
    throw InvalidParameter("fixed factory distance must be >= 1");
  }
}

std::string DistillationModel::version() const {
  std::string v = std::to_string(inputs_per_output) + "to1(c=" +
                  format_double(output_coefficient) +
                  ",p=" + std::to_string(output_exponent) +
                  ",beta=" + format_double(footprint_factor) + ",inj=" +
                  (injection_error ? format_double(*injection_error)
                                   : std::string("phys")) +
                  ",dist=" + std::string(to_string(distance_policy));
  if (distance_policy == FactoryDistancePolicy::Fixed) {
    v += ":" + std::to_string(fixed_distance);
  }
  return v + ")";
}

double injected_error(double eps, const DistillationModel& model) {
  check_eps(eps);
  return model.injection_error.value_or(eps);
}

double level_output_error(int level, double eps,
                          const DistillationModel& model) {
  if (level < 0) throw InvalidParameter("distillation level must be >= 0");
  double e = injected_error(eps, model);
  for (int l = 0; l < level; ++l) e = next_level(e, model);
  return e;
}

int useful_levels(double eps, const DistillationModel& model) {
  model.validate();
  double e = injected_error(eps, model);
  int levels = 0;
  while (levels < kMaxLevels) {
    const double next = next_level(e, model);
    if (!(next < e) || next < std::numeric_limits<double>::min()) break;
    e = next;
    ++levels;
  }
  return levels;
}

int factory_distance(int level, double eps, const SurfaceCodeConfig& data_code,
                     const DistillationModel& model) {
  data_code.validate();
  switch (model.distance_policy) {
    case FactoryDistancePolicy::TiedToData:
      return data_code.distance;
    case FactoryDistancePolicy::Fixed:
      return model.fixed_distance;
    case FactoryDistancePolicy::Matched:
      break;
  }
  const double target = level_output_error(level, eps, model);
  const auto d = protecting_distance(eps, target, data_code.threshold);
  return std::max(data_code.distance, d.value_or(data_code.distance));
}

std::int64_t level_cost(int level, double eps,
                        const SurfaceCodeConfig& data_code,
                        const DistillationModel& model) {
  model.validate();
  if (level < 0) throw InvalidParameter("distillation level must be >= 0");
  if (level == 0) return 0;
  const int d = factory_distance(level, eps, data_code, model);
  const double side = 2.0 * d - 1.0;
  const double cost = std::ceil(model.footprint_factor *
                                std::pow(model.inputs_per_output, level) *
                                side * side);
  if (!(cost < 9.2e18)) return kSaturated;
  return static_cast<std::int64_t>(cost);
}

DistillationOutcome distill(std::int64_t budget, double eps,
                            const SurfaceCodeConfig& data_code,
                            const DistillationModel& model) {
  if (budget < 0) throw InvalidParameter("distillation budget must be >= 0");
  DistillationOutcome out;
  out.eps_T = injected_error(eps, model);
  const int max_level = useful_levels(eps, model);
  for (int l = 1; l <= max_level; ++l) {
    const std::int64_t cost = level_cost(l, eps, data_code, model);
    if (cost > budget) break;
    out.levels = l;
    out.qubits_used = cost;
  }
  if (out.levels > 0) {
    out.eps_T = level_output_error(out.levels, eps, model);
    out.factory_distance = factory_distance(out.levels, eps, data_code, model);
  }
  return out;
}

std::int64_t required_budget(double target, double eps,
                             const SurfaceCodeConfig& data_code,
                             const DistillationModel& model) {
  if (!(target > 0.0)) {
    throw InvalidParameter("target eps_T must be positive");
  }
  if (target >= injected_error(eps, model)) return 0;
  const int max_level = useful_levels(eps, model);
  for (int l = 1; l <= max_level; ++l) {
    if (level_output_error(l, eps, model) <= target) {
      return level_cost(l, eps, data_code, model);
    }
  }
  throw UnachievableTarget("eps_T <= " + format_double(target) +
                           " is out of reach from physical error " +
                           format_double(eps) + " with " + model.version());
}

std::vector<std::int64_t> level_costs(std::int64_t n_max, double eps,
                                      const SurfaceCodeConfig& data_code,
                                      const DistillationModel& model) {
  std::vector<std::int64_t> costs;
  const int max_level = useful_levels(eps, model);
  for (int l = 1; l <= max_level; ++l) {
    const std::int64_t cost = level_cost(l, eps, data_code, model);
    if (cost > n_max) break;
    costs.push_back(cost);
  }
  return costs;
}

}  // namespace qvest
