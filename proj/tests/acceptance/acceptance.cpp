// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Usage: qvest_acceptance <path-to-qvest-cli> <scratch-dir>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "qvest/distillation.hpp"
#include "qvest/ft_architect.hpp"
#include "qvest/metrics.hpp"
#include "qvest/surface_code.hpp"
#include "qvest/synthesis.hpp"
#include "qvest/topology.hpp"
#include "qvest/validator.hpp"

namespace fs = std::filesystem;
using namespace qvest;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome closed_form_vs_brute_force() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (int k : {1, 2, 3}) {
    for (double m : {0.0, 0.5, 1.0}) {
      for (int i = 0; i < 20; ++i) {
        const double eps = std::pow(10.0, -6.0 + 5.0 * i / 19.0);
        const MetricQuery q{k, 1'000'000, eps};
        const double diff =
            std::abs(qv_closed_form(q, m).value - qv_brute_force(q, m).value);
        worst = std::max(worst, diff);
      }
    }
  }
  const double t = seconds_since(start);
  return {worst <= 1.0 && t < 10.0,
          fmt("max |diff| = %.6g", worst) + fmt(", runtime %.2f s", t)};
}

Outcome regime_boundary() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> k_dist(1, 3);
  std::uniform_real_distribution<double> log_eps(-8.0, -1.0);
  double worst_rel = 0.0;
  bool plateau = true;
  for (int i = 0; i < 50; ++i) {
    const int k = k_dist(rng);
    const double eps = std::pow(10.0, log_eps(rng));
    const auto e = qv_closed_form({k, 1, eps});
    worst_rel = std::max(worst_rel, std::abs(std::pow(e.n_opt, k + 1) * eps - 1.0));
    const auto above = static_cast<std::int64_t>(std::ceil(e.n_opt)) + 1;
    const double v = qv_closed_form({k, above, eps}).value;
    for (std::int64_t n : {above * 2, above * 10, above * 1000}) {
      plateau = plateau && qv_closed_form({k, n, eps}).value == v;
    }
  }
  return {worst_rel <= 1e-9 && plateau,
          fmt("max rel err of n_opt^(k+1) eps = 1: %.3g", worst_rel) +
              (plateau ? ", plateau constant" : ", plateau varies")};
}

Outcome su4_expansion() {
  double worst_ratio = 0.0;
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      const double e1 = 1e-2 * i / 40.0;
      const double e2 = 1e-2 * j / 40.0;
      const double first = 7.0 * e1 + 3.0 * e2;
      if (first == 0.0) continue;
      const double gap = std::abs(su4_error({e1, e2}) - first);
      worst_ratio = std::max(worst_ratio, gap / (10.0 * first * first));
    }
  }
  return {worst_ratio <= 1.0, fmt("max |exact - first order| / bound = %.4f", worst_ratio)};
}

Outcome surface_code_fixed_point() {
  bool exact = true;
  for (int d = 1; d <= 50; ++d) exact = exact && logical_error(0.01, {d}) == 0.01;
  const double rel = std::abs(logical_error(1e-3, {3}) - 1e-4) / 1e-4;
  return {exact && rel <= 1e-12,
          std::string(exact ? "fixed point exact for d in [1, 50]" : "fixed point broken") +
              fmt(", rel err at (1e-3, 3) = %.3g", rel)};
}

Outcome naive_qec_staircase() {
  const auto start = Clock::now();
  bool values_ok = true;
  bool distances_ok = true;
  double previous = 0.0;
  int previous_d = 1;
  int points = 0;
  for (int i = 0; i <= 500; ++i) {
    const double x = 1.0 + 5.0 * i / 500.0;
    const auto n = static_cast<std::int64_t>(std::llround(std::pow(10.0, x)));
    const auto r = optimize_naive_qec(1, n, 1e-3);
    values_ok = values_ok && r.metric.value >= previous;
    distances_ok = distances_ok && r.best_distance >= previous_d;
    previous = r.metric.value;
    previous_d = r.best_distance;
    ++points;
  }
  const double t = seconds_since(start);
  return {values_ok && distances_ok && t < 30.0,
          std::to_string(points) + " points, value " +
              (values_ok ? "monotone" : "NOT monotone") + ", d_c " +
              (distances_ok ? "monotone" : "NOT monotone") + ", final d_c " +
              std::to_string(previous_d) + fmt(", runtime %.2f s", t)};
}

Outcome optimal_precision_check() {
  double worst = 0.0;
  for (double eps_T : {1e-4, 1e-6, 1e-8}) {
    const auto f = [&](double log_p) { return ft_effective_error(std::exp(log_p), eps_T, 0.0); };
    const double numeric = std::exp(oracle::golden_section_minimize(f, std::log(1e-16), 0.0));
    const double analytic = 3.0 * eps_T / std::log(2.0);
    worst = std::max(worst, std::abs(numeric - analytic) / analytic);
    worst = std::max(worst, std::abs(optimal_precision(eps_T).eps_P - analytic) / analytic);
  }
  return {worst <= 0.01, fmt("max rel deviation = %.3g", worst)};
}

Outcome viability_threshold() {
  std::int64_t first = 0;
  for (std::int64_t n = 1; n <= 100'000; ++n) {
    if (optimize_ft(1, n, 1e-3, kDefaultCodeThreshold).beats_unencoded) {
      first = n;
      break;
    }
  }
  if (first == 0) return {false, "beats_unencoded never true up to n_max = 100000"};
  const auto best = optimize_ft(1, first, 1e-3, kDefaultCodeThreshold);
  std::ostringstream detail;
  detail << "smallest n_max = " << first << " (d_c=" << best.layout.d_c
         << ", n_D=" << best.layout.n_D << ", factory d=" << best.factory_distance
         << ", model " << DistillationModel{}.version() << ")";
  return {first >= 2000 && first <= 10'000, detail.str()};
}

Outcome monte_carlo_depth() {
  const auto start = Clock::now();
  const auto s = simulate_depth_to_first_error({20, 1e-3, 100'000, 42});
  const double t = seconds_since(start);
  const double exact = 1.0 / (1.0 - std::pow(0.999, 20));
  const double z = (s.mean_depth - exact) / s.std_error;
  const double rel = std::abs(s.mean_depth - 50.0) / 50.0;
  return {std::abs(z) <= 3.0 && rel <= 0.1 && t < 5.0,
          fmt("mean %.4f", s.mean_depth) + fmt(" vs %.4f", exact) + fmt(" (z = %.3f)", z) +
              fmt(", %.2f%% from 50", 100.0 * rel) + fmt(", runtime %.2f s", t)};
}

Outcome topology_exponents() {
  const auto fit = [](TopologyKind kind) {
    return fit_connectivity_exponent(kind, default_fit_sizes(kind)).m_fit;
  };
  const double linear = fit(TopologyKind::LinearChain);
  const double grid = fit(TopologyKind::SquareGrid);
  const double complete = fit(TopologyKind::Complete);
  return {std::abs(linear - 1.0) <= 0.1 && std::abs(grid - 0.5) <= 0.15 && complete == 0.0,
          fmt("linear %.4f", linear) + fmt(", grid %.4f", grid) + fmt(", complete %.4g", complete)};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Outcome cli_determinism(const std::string& cli, const fs::path& scratch) {
  if (cli.empty()) return {false, "no CLI path given"};
  fs::create_directories(scratch);
  const fs::path spec = scratch / "device.json";
  {
    std::ofstream out(spec);
    out << R"({"name": "acceptance", "n_max": 20000, "topology": "grid", "eps_1": 1e-4, "eps_2": 1e-3})"
        << '\n';
  }
  const std::string s = "\"" + spec.string() + "\"";
  const std::vector<std::pair<std::string, std::string>> commands{
      {"estimate", "estimate --spec " + s + " --mode physical"},
      {"estimate_ft", "estimate --spec " + s + " --mode full-ft --format csv"},
      {"optimize", "optimize --spec " + s + " --mode naive-qec --k 1,2"},
      {"sweep", "sweep --spec " + s + " --var eps_eff --lo 1e-6 --hi 1e-1 --points 25 --k 1,2,3 --m 0,0.5,1"},
      {"validate", "validate --n 20 --eps-eff 1e-3 --trials 100000 --seed 42"},
      {"fit", "fit-topology --kind grid"},
  };
  int identical = 0;
  std::string failed;
  for (const auto& [name, args] : commands) {
    std::string runs[2];
    bool ok = true;
    for (int r = 0; r < 2; ++r) {
      const fs::path out = scratch / (name + "." + std::to_string(r) + ".out");
      const std::string cmd = "\"" + cli + "\" " + args + " --out \"" + out.string() + "\"";
      ok = ok && std::system(cmd.c_str()) == 0;
      runs[r] = read_file(out);
    }
    if (ok && !runs[0].empty() && runs[0] == runs[1]) {
      ++identical;
    } else {
      failed += " " + name;
    }
  }
  return {identical == static_cast<int>(commands.size()),
          std::to_string(identical) + "/" + std::to_string(commands.size()) +
              " subcommands byte-identical" + (failed.empty() ? "" : "; differing:" + failed)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const fs::path scratch = argc > 2 ? fs::path(argv[2]) : fs::temp_directory_path() / "qvest_acceptance";

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"closed form vs brute force", closed_form_vs_brute_force},
      {"regime boundary", regime_boundary},
      {"su4 first-order expansion", su4_expansion},
      {"surface code fixed point", surface_code_fixed_point},
      {"naive QEC stair-step", naive_qec_staircase},
      {"optimal rotation precision", optimal_precision_check},
      {"QEC viability threshold", viability_threshold},
      {"Monte Carlo depth", monte_carlo_depth},
      {"topology exponent recovery", topology_exponents},
      {"CLI determinism", [&] { return cli_determinism(cli, scratch); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
