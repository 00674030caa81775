// qvest: quantum volumetric metric estimator.
//
//   qvest estimate     --spec dev.json --k 1,2,3 --mode physical
//   qvest optimize     --spec dev.json --k 1 --mode full-ft
//   qvest sweep        --spec dev.json --var eps_eff --lo 1e-6 --hi 1e-1 ...
//   qvest validate     --n 20 --eps-eff 1e-3 --trials 100000 --seed 42
//   qvest fit-topology --kind grid --sizes 16,64,144,256
//
// Exit codes: 0 ok, 2 validation error, 3 parse error, 4 numeric domain.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qvest/app/device_spec.hpp"
#include "qvest/app/reports.hpp"
#include "qvest/app/sweep.hpp"
#include "qvest/format.hpp"

namespace {

using namespace qvest;
using namespace qvest::app;

struct CommonOptions {
  std::string spec_path;
  std::vector<int> ks{1, 2, 3};
  std::string mode = "physical";
  std::string out_path;
  std::string format = "json";
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ValidationError("cannot write output file '" + out_path + "'");
  out << text;
}

void add_output_flags(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--out", opts.out_path, "Output file (default: stdout)");
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Estimate quantum volumetric metrics (QV-k) of a device"};
  app.require_subcommand(1);

  CommonOptions est;
  auto* estimate = app.add_subcommand("estimate", "QV-k of a device in one mode");
  estimate->add_option("--spec", est.spec_path, "Device spec JSON")->required();
  estimate->add_option("--k", est.ks, "Volumetric classes")->delimiter(',');
  estimate->add_option("--mode", est.mode, "physical | naive-qec | full-ft");
  add_output_flags(estimate, est);

  CommonOptions opt;
  opt.mode = "full-ft";
  opt.ks = {1};
  auto* optimize = app.add_subcommand("optimize", "QEC configuration search");
  optimize->add_option("--spec", opt.spec_path, "Device spec JSON")->required();
  optimize->add_option("--k", opt.ks, "Volumetric classes")->delimiter(',');
  optimize->add_option("--mode", opt.mode, "naive-qec | full-ft");
  add_output_flags(optimize, opt);

  CommonOptions swp;
  swp.format = "csv";
  SweepRequest req;
  std::string variable = "n_max";
  std::string scale = "log";
  std::vector<double> ms;
  auto* sweep = app.add_subcommand("sweep", "Parameter sweep to CSV");
  sweep->add_option("--spec", swp.spec_path, "Device spec JSON")->required();
  sweep->add_option("--var", variable, "n_max | eps_2 | eps_eff | eps_T");
  sweep->add_option("--lo", req.lo, "Lower end of the range")->required();
  sweep->add_option("--hi", req.hi, "Upper end of the range")->required();
  sweep->add_option("--points", req.points, "Grid points (>= 2)");
  sweep->add_option("--scale", scale, "log | linear")
      ->check(CLI::IsMember({"log", "linear"}));
  sweep->add_option("--k", swp.ks, "Volumetric classes")->delimiter(',');
  sweep->add_option("--m", ms, "Connectivity exponents (physical mode)")
      ->delimiter(',');
  sweep->add_option("--mode", swp.mode, "physical | naive-qec | full-ft");
  sweep->add_option("--eps1-ratio", req.eps1_ratio, "eps_1 / eps_2 for eps_2 sweeps");
  sweep->add_option("--out", swp.out_path, "Output file (default: stdout)");
  sweep->add_option("--format", swp.format, "Output format")
      ->check(CLI::IsMember({"csv"}));

  CommonOptions val;
  TrialConfig trial;
  trial.n = 20;
  trial.trials = 100000;
  trial.seed = 42;
  auto* validate = app.add_subcommand("validate", "Monte Carlo check of the depth model");
  validate->add_option("--n", trial.n, "Qubits per layer");
  validate->add_option("--eps-eff", trial.eps_eff, "Per-qubit per-layer error");
  validate->add_option("--trials", trial.trials, "Monte Carlo trials");
  validate->add_option("--seed", trial.seed, "RNG seed");
  add_output_flags(validate, val);

  CommonOptions fit;
  std::string kind;
  std::vector<std::int64_t> sizes;
  auto* fit_topology =
      app.add_subcommand("fit-topology", "Average swaps and connectivity exponent m");
  auto* kind_opt = fit_topology->add_option("--kind", kind, "complete | grid | linear");
  fit_topology->add_option("--sizes", sizes, "Family sizes (>= 4)")->delimiter(',');
  fit_topology->add_option("--spec", fit.spec_path, "Device spec with a topology")
      ->excludes(kind_opt);
  add_output_flags(fit_topology, fit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*estimate) {
      const DeviceSpec spec = parse_device_spec(est.spec_path);
      const auto report = estimate_report(spec, est.ks, mode_from_string(est.mode));
      emit(est.format == "csv" ? estimate_csv(report) : dump(report), est.out_path);
    } else if (*optimize) {
      const DeviceSpec spec = parse_device_spec(opt.spec_path);
      const auto report = optimize_report(spec, opt.ks, mode_from_string(opt.mode));
      emit(opt.format == "csv" ? optimize_csv(report) : dump(report), opt.out_path);
    } else if (*sweep) {
      const DeviceSpec spec = parse_device_spec(swp.spec_path);
      req.variable = sweep_variable_from_string(variable);
      req.log_scale = scale == "log";
      req.k_values = swp.ks;
      req.m_values = ms;
      req.mode = mode_from_string(swp.mode);
      emit(sweep_csv(req, spec), swp.out_path);
    } else if (*validate) {
      const auto report = validate_report(trial);
      if (val.format == "csv") {
        std::ostringstream csv;
        csv << "check,observed,analytic_exact,analytic_linear,std_error,z_score,pass\n";
        for (const char* key : {"depth", "single_step"}) {
          const auto& r = report.at(key);
          const double observed = r.contains("mean") ? r.at("mean").get<double>()
                                                     : r.at("rate").get<double>();
          csv << key << ',' << qvest::format_double(observed) << ','
              << qvest::format_double(r.at("analytic_exact").get<double>()) << ','
              << qvest::format_double(r.at("analytic_linear").get<double>()) << ','
              << qvest::format_double(r.at("std_error").get<double>()) << ','
              << qvest::format_double(r.at("z_score").get<double>()) << ','
              << (r.at("pass").get<bool>() ? "true" : "false") << '\n';
        }
        emit(csv.str(), val.out_path);
      } else {
        emit(dump(report), val.out_path);
      }
    } else if (*fit_topology) {
      nlohmann::json report;
      if (!fit.spec_path.empty()) {
        const DeviceSpec spec = parse_device_spec(fit.spec_path);
        if (spec.topology.kind == TopologyKind::Custom) {
          report = fit_topology_report(
              TopologyGraph::custom(spec.n_max, spec.topology.edges));
        } else {
          const auto ladder = sizes.empty() ? default_fit_sizes(spec.topology.kind)
                                            : sizes;
          report = fit_topology_report(spec.topology.kind, ladder);
        }
      } else {
        if (kind.empty()) throw ValidationError("fit-topology needs --kind or --spec");
        TopologyKind k = TopologyKind::Custom;
        try {
          k = topology_kind_from_string(kind);
        } catch (const InvalidParameter& e) {
          throw ValidationError(e.what());
        }
        if (k == TopologyKind::Custom) {
          throw ValidationError("custom topologies are read from --spec");
        }
        try {
          report = fit_topology_report(k, sizes.empty() ? default_fit_sizes(k) : sizes);
        } catch (const InvalidParameter& e) {
          throw ValidationError(e.what());
        }
      }
      emit(fit.format == "csv" ? fit_topology_csv(report) : dump(report), fit.out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "qvest: error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kExitOk;
}
