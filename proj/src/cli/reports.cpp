#include "qvest/app/reports.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "qvest/format.hpp"
#include "qvest/ft_architect.hpp"
#include "qvest/surface_code.hpp"

namespace qvest::app {

namespace {

using nlohmann::json;

json optional_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string csv_field(const json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_number()) return v.dump();
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_table(const std::vector<std::string>& header,
                      const json& rows) {
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    out << (i ? "," : "") << header[i];
  }
  out << '\n';
  for (const json& row : rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      out << (i ? "," : "")
          << (row.contains(header[i]) ? csv_field(row.at(header[i])) : "");
    }
    out << '\n';
  }
  return out.str();
}

void check_ks(std::span<const int> ks) {
  if (ks.empty()) throw ValidationError("at least one k is required");
  for (const int k : ks) {
    if (k < 1) throw ValidationError("k = " + std::to_string(k) + " must be >= 1");
  }
}

json connectivity_json(const Connectivity& c) {
  return {{"m", c.m},
          {"m_fit", c.m_fit},
          {"fit_residual", c.fit_residual},
          {"avg_swaps", optional_json(c.avg_swaps)},
          {"clamped", c.clamped}};
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Physical:
      return "physical";
    case Mode::NaiveQec:
      return "naive-qec";
    case Mode::FullFt:
      return "full-ft";
  }
  return "unknown";
}

Mode mode_from_string(std::string_view name) {
  if (name == "physical") return Mode::Physical;
  if (name == "naive-qec") return Mode::NaiveQec;
  if (name == "full-ft") return Mode::FullFt;
  throw ValidationError("unknown mode '" + std::string(name) +
                        "' (expected physical, naive-qec or full-ft)");
}

Estimate estimate_point(const DeviceSpec& spec, int k, Mode mode,
                        std::int64_t n_max, double eps,
                        const Connectivity& conn) {
  Estimate e;
  e.k = k;
  e.mode = mode;
  e.eps = eps;
  switch (mode) {
    case Mode::Physical: {
      e.m = conn.m;
      e.metric = qv_closed_form(MetricQuery{k, n_max, eps}, conn.m);
      e.n_L = n_max;
      e.eps_eff = std::min(1.0, std::pow(std::max(e.metric.width, 1.0), e.m) * eps);
      break;
    }
    case Mode::NaiveQec: {
      const NaiveQecResult r = optimize_naive_qec(k, n_max, eps, spec.eps_th);
      e.metric = r.metric;
      e.d_c = r.best_distance;
      e.n_L = r.logical_qubits;
      e.eps_L = r.logical_error;
      e.eps_eff = r.logical_error;
      break;
    }
    case Mode::FullFt: {
      FtOptions options;
      options.ancilla_factor = spec.ancilla_factor;
      const FtOptimum r =
          optimize_ft(k, n_max, eps, spec.eps_th, spec.distillation, options);
      e.metric = r.metric;
      e.d_c = r.layout.d_c;
      e.n_D = r.layout.n_D;
      e.n_L = r.layout.n_L;
      e.eps_eff = r.eps_eff;
      e.eps_L = r.eps_L;
      if (!r.unencoded) {
        e.eps_T = r.eps_T;
        e.eps_P = r.eps_P;
      }
      e.beats_unencoded = r.beats_unencoded;
      e.distillation_levels = r.distillation_levels;
      e.factory_distance = r.factory_distance;
      break;
    }
  }
  return e;
}

Estimate estimate_one(const DeviceSpec& spec, int k, Mode mode) {
  const Connectivity conn =
      mode == Mode::Physical ? connectivity(spec) : Connectivity{};
  return estimate_point(spec, k, mode, spec.n_max, spec.connected_error(), conn);
}

nlohmann::json to_json(const Estimate& e) {
  json out = {
      {"k", e.k},
      {"mode", std::string(to_string(e.mode))},
      {"metric_value", e.metric.value},
      {"regime", std::string(to_string(e.metric.regime))},
      {"n_opt", e.metric.n_opt},
      {"width", e.metric.width},
      {"depth", e.metric.depth_at_value},
      {"m", e.m},
      {"d_c", e.d_c},
      {"n_D", e.n_D},
      {"n_L", e.n_L},
      {"eps", e.eps},
      {"eps_eff", e.eps_eff},
      {"eps_L", optional_json(e.eps_L)},
      {"eps_T", optional_json(e.eps_T)},
      {"eps_P", optional_json(e.eps_P)},
  };
  out["beats_unencoded"] =
      e.beats_unencoded ? json(*e.beats_unencoded) : json(nullptr);
  if (e.distillation_levels) out["distillation_levels"] = *e.distillation_levels;
  if (e.factory_distance) out["factory_distance"] = *e.factory_distance;
  return out;
}

nlohmann::json estimate_report(const DeviceSpec& spec, std::span<const int> ks,
                               Mode mode) {
  check_ks(ks);
  const Connectivity conn =
      mode == Mode::Physical ? connectivity(spec) : Connectivity{};
  json estimates = json::array();
  for (const int k : ks) {
    estimates.push_back(to_json(estimate_point(spec, k, mode, spec.n_max,
                                               spec.connected_error(), conn)));
  }
  return {{"model_version", model_version(spec)},
          {"command", "estimate"},
          {"mode", std::string(to_string(mode))},
          {"device", to_json(spec)},
          {"connectivity", connectivity_json(conn)},
          {"estimates", estimates}};
}

std::string estimate_csv(const nlohmann::json& report) {
  return csv_table({"k", "mode", "metric_value", "regime", "n_opt", "m", "d_c",
                    "n_D", "n_L", "eps", "eps_eff", "eps_L", "eps_T", "eps_P",
                    "beats_unencoded"},
                   report.at("estimates"));
}

nlohmann::json optimize_report(const DeviceSpec& spec, std::span<const int> ks,
                               Mode mode) {
  check_ks(ks);
  if (mode == Mode::Physical) {
    throw ValidationError("optimize needs --mode naive-qec or full-ft");
  }
  const double eps = spec.connected_error();
  json results = json::array();
  for (const int k : ks) {
    json per_distance = json::array();
    if (mode == Mode::NaiveQec) {
      const int d_max = max_code_distance(spec.n_max);
      for (int d = 1; d <= d_max; ++d) {
        const std::int64_t n_logical = spec.n_max / qubits_per_logical(d);
        const double eps_logical = logical_error(eps, {d, spec.eps_th});
        const MetricEstimate metric =
            qv_closed_form(MetricQuery{k, n_logical, eps_logical});
        per_distance.push_back({{"d_c", d},
                                {"n_L", n_logical},
                                {"eps_L", eps_logical},
                                {"metric_value", metric.value}});
      }
    } else {
      FtOptions options;
      options.ancilla_factor = spec.ancilla_factor;
      const auto candidates = ft_candidates(k, spec.n_max, eps, spec.eps_th,
                                            spec.distillation, options);
      // Best (first maximal) candidate for each distance.
      std::map<int, const FtOptimum*> best;
      for (const FtOptimum& c : candidates) {
        auto [it, inserted] = best.try_emplace(c.layout.d_c, &c);
        if (!inserted && c.metric.value > it->second->metric.value) {
          it->second = &c;
        }
      }
      for (const auto& [d, c] : best) {
        per_distance.push_back({{"d_c", d},
                                {"n_D", c->layout.n_D},
                                {"n_L", c->layout.n_L},
                                {"eps_L", c->eps_L},
                                {"eps_T", c->eps_T},
                                {"eps_P", c->eps_P},
                                {"eps_eff", c->eps_eff},
                                {"distillation_levels", c->distillation_levels},
                                {"unencoded", c->unencoded},
                                {"metric_value", c->metric.value}});
      }
    }
    results.push_back({{"k", k},
                       {"optimum", to_json(estimate_one(spec, k, mode))},
                       {"per_distance", per_distance}});
  }
  return {{"model_version", model_version(spec)},
          {"command", "optimize"},
          {"mode", std::string(to_string(mode))},
          {"device", to_json(spec)},
          {"results", results}};
}

std::string optimize_csv(const nlohmann::json& report) {
  json rows = json::array();
  for (const json& r : report.at("results")) {
    for (json row : r.at("per_distance")) {
      row["k"] = r.at("k");
      row["chosen"] = row.at("d_c") == r.at("optimum").at("d_c") &&
                      (!row.contains("n_D") ||
                       row.at("n_D") == r.at("optimum").at("n_D"));
      rows.push_back(row);
    }
  }
  return csv_table({"k", "d_c", "n_D", "n_L", "eps_L", "eps_T", "eps_P",
                    "eps_eff", "metric_value", "chosen"},
                   rows);
}

nlohmann::json validate_report(const TrialConfig& cfg) {
  try {
    cfg.validate();
  } catch (const InvalidParameter& e) {
    throw ValidationError(e.what());
  }
  if (cfg.eps_eff == 0.0) {
    throw ValidationError("validate needs eps_eff > 0 (depth is unbounded)");
  }
  const auto trials = static_cast<double>(cfg.trials);

  auto check = [](double observed, double expected, double sigma) {
    const double diff = observed - expected;
    const double z = sigma > 0.0 ? diff / sigma : (diff == 0.0 ? 0.0 : INFINITY);
    return std::pair{z, std::abs(z) <= 3.0};
  };

  const DepthStatistics depth = simulate_depth_to_first_error(cfg);
  const double depth_exact = exact_mean_depth(cfg.n, cfg.eps_eff);
  const double depth_linear = 1.0 / (static_cast<double>(cfg.n) * cfg.eps_eff);
  const auto [depth_z, depth_pass] =
      check(depth.mean_depth, depth_exact, depth.std_error);

  const double p_layer = layer_failure_probability(cfg.n, cfg.eps_eff);

  const double rate = single_step_error_rate(cfg);
  const double rate_sigma = std::sqrt(p_layer * (1.0 - p_layer) / trials);
  const auto [rate_z, rate_pass] = check(rate, p_layer, rate_sigma);

  return {{"model_version", std::string("qvest ") + QVEST_VERSION +
                                "; rng=splitmix64-counter; block=4096"},
          {"command", "validate"},
          {"input",
           {{"n", cfg.n},
            {"eps_eff", cfg.eps_eff},
            {"trials", cfg.trials},
            {"seed", cfg.seed}}},
          {"depth",
           {{"mean", depth.mean_depth},
            {"std_error", depth.std_error},
            {"analytic_exact", depth_exact},
            {"analytic_linear", depth_linear},
            {"z_score", depth_z},
            {"pass", depth_pass}}},
          {"single_step",
           {{"rate", rate},
            {"std_error", rate_sigma},
            {"analytic_exact", p_layer},
            {"analytic_linear", std::min(1.0, static_cast<double>(cfg.n) * cfg.eps_eff)},
            {"z_score", rate_z},
            {"pass", rate_pass}}},
          {"pass", depth_pass && rate_pass}};
}

nlohmann::json fit_topology_report(TopologyKind kind,
                                   std::span<const std::int64_t> sizes) {
  const ConnectivityFit fit = fit_connectivity_exponent(kind, sizes);
  return {{"command", "fit-topology"},
          {"kind", std::string(to_string(kind))},
          {"sizes", fit.sizes},
          {"avg_swaps", fit.avg_swaps},
          {"m_fit", fit.m_fit},
          {"fit_residual", fit.residual}};
}

nlohmann::json fit_topology_report(const TopologyGraph& graph) {
  const TopologyProfile profile = profile_topology(graph);
  return {{"command", "fit-topology"},
          {"kind", std::string(to_string(graph.kind()))},
          {"sizes", {graph.qubit_count()}},
          {"avg_swaps", {profile.avg_swaps}},
          {"m_fit", profile.m_fit},
          {"fit_residual", profile.fit_residual}};
}

std::string fit_topology_csv(const nlohmann::json& report) {
  json rows = json::array();
  const auto& sizes = report.at("sizes");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    rows.push_back({{"kind", report.at("kind")},
                    {"n", sizes[i]},
                    {"avg_swaps", report.at("avg_swaps")[i]},
                    {"m_fit", report.at("m_fit")},
                    {"fit_residual", report.at("fit_residual")}});
  }
  return csv_table({"kind", "n", "avg_swaps", "m_fit", "fit_residual"}, rows);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace qvest::app
