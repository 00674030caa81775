#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qvest/app/device_spec.hpp"
#include "qvest/metrics.hpp"
#include "qvest/validator.hpp"

namespace qvest::app {

enum class Mode { Physical, NaiveQec, FullFt };

std::string_view to_string(Mode mode);
Mode mode_from_string(std::string_view name);

/// One QV-k evaluation of a device in a given mode, with every
/// intermediate rate. Unused rates are empty.
struct Estimate {
  int k = 1;
  Mode mode = Mode::Physical;
  MetricEstimate metric;
  double m = 0.0;  // connectivity exponent applied to the metric
  int d_c = 1;
  std::int64_t n_D = 0;
  std::int64_t n_L = 0;
  double eps = 0.0;  // connected-pair physical error
  double eps_eff = 0.0;
  std::optional<double> eps_L;
  std::optional<double> eps_T;
  std::optional<double> eps_P;
  std::optional<bool> beats_unencoded;
  std::optional<int> distillation_levels;
  std::optional<int> factory_distance;
};

/// Evaluates the device with its connected-pair error replaced by `eps`
/// and its qubit count by `n_max` (sweeps use this entry point).
Estimate estimate_point(const DeviceSpec& spec, int k, Mode mode,
                        std::int64_t n_max, double eps,
                        const Connectivity& conn);
Estimate estimate_one(const DeviceSpec& spec, int k, Mode mode);

nlohmann::json to_json(const Estimate& e);

/// Report: model version, resolved device, connectivity, one entry per k.
nlohmann::json estimate_report(const DeviceSpec& spec, std::span<const int> ks,
                               Mode mode);
std::string estimate_csv(const nlohmann::json& report);

/// Optimiser report: the chosen configuration per k plus, per code
/// distance, the best candidate the search saw.
nlohmann::json optimize_report(const DeviceSpec& spec, std::span<const int> ks,
                               Mode mode);
std::string optimize_csv(const nlohmann::json& report);

/// Monte Carlo depth and single-step checks against the analytic model,
/// passing at 3 standard errors.
nlohmann::json validate_report(const TrialConfig& cfg);

nlohmann::json fit_topology_report(TopologyKind kind,
                                   std::span<const std::int64_t> sizes);
nlohmann::json fit_topology_report(const TopologyGraph& graph);
std::string fit_topology_csv(const nlohmann::json& report);

/// Stable JSON text: two-space indent, trailing LF.
std::string dump(const nlohmann::json& j);

}  // namespace qvest::app
