#include "qvest/ft_architect.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qvest/error.hpp"

namespace qvest {

namespace {

void check_layout(const ArchitectureLayout& layout) {
  if (layout.n_max < 1) throw InvalidParameter("n_max must be >= 1");
  if (layout.n_D < 0 || layout.n_D > layout.n_max) {
    throw InvalidParameter("distillation block n_D=" +
                           std::to_string(layout.n_D) +
                           " must lie in [0, n_max]");
  }
  if (layout.d_c < 1) throw InvalidParameter("code distance must be >= 1");
  if (!(layout.ancilla_factor >= 1.0) || !std::isfinite(layout.ancilla_factor)) {
    throw InvalidParameter("ancilla factor must be >= 1");
  }
}

MetricEstimate score(int k, std::int64_t n_logical, double eps_eff,
                     const FtOptions& options) {
  MetricQuery query{k, std::max<std::int64_t>(n_logical, 1), eps_eff,
                    options.success_threshold};
  MetricEstimate metric = qv_closed_form(query, options.logical_connectivity);
  if (n_logical < 1) {
    metric.value = 0.0;
    metric.width = 0.0;
    metric.depth_at_value = 0.0;
    metric.regime = Regime::QubitLimited;
  }
  return metric;
}

}  // namespace

std::int64_t logical_qubits(const ArchitectureLayout& layout) {
  check_layout(layout);
  const double per_logical =
      layout.ancilla_factor * static_cast<double>(qubits_per_logical(layout.d_c));
  return static_cast<std::int64_t>(
      std::floor(static_cast<double>(layout.n_max - layout.n_D) / per_logical));
}

FtOptimum evaluate_architecture(const ArchitectureLayout& layout, double eps,
                                double eps_th, const DistillationModel& model,
                                int k, const FtOptions& options) {
  check_layout(layout);
  if (!(eps > 0.0 && eps < 1.0)) {
    throw InvalidParameter("physical error must lie in (0, 1)");
  }
  FtOptimum out;
  out.layout = layout;

  if (layout.d_c == 1 && layout.n_D == 0) {
    out.unencoded = true;
    out.layout.ancilla_factor = 1.0;
    out.layout.n_L = layout.n_max;
    out.eps_L = eps;
    out.eps_T = eps;
    out.eps_P = 0.0;
    out.eps_eff = eps;
    out.metric = score(k, layout.n_max, eps, options);
    return out;
  }

  const SurfaceCodeConfig code{layout.d_c, eps_th};
  out.layout.n_L = logical_qubits(layout);
  out.eps_L = logical_error(eps, code);

  const DistillationOutcome factory = distill(layout.n_D, eps, code, model);
  out.eps_T = factory.eps_T;
  out.distillation_levels = factory.levels;
  out.factory_distance = factory.factory_distance;

  const Precision precision = optimal_precision(out.eps_T, options.synthesis);
  out.eps_P = precision.eps_P;
  if (precision.clamped) {
    out.eps_P = 0.5;
    out.synthesis_dominated = true;
  }
  const double raw =
      ft_effective_error(out.eps_P, out.eps_T, out.eps_L, options.synthesis);
  out.eps_eff = std::min(1.0, raw);
  out.metric = score(k, out.layout.n_L, out.eps_eff, options);
  return out;
}

std::vector<FtOptimum> ft_candidates(int k, std::int64_t n_max, double eps,
                                     double eps_th,
                                     const DistillationModel& model,
                                     const FtOptions& options) {
  model.validate();
  std::vector<FtOptimum> out;
  const ArchitectureLayout unencoded{n_max, 0, 1, options.ancilla_factor, 0};
  out.push_back(evaluate_architecture(unencoded, eps, eps_th, model, k, options));

  const int d_max = max_code_distance(n_max);
  for (int d = 1; d <= d_max; ++d) {
    const SurfaceCodeConfig code{d, eps_th};
    std::vector<std::int64_t> blocks{0};
    for (const std::int64_t cost : level_costs(n_max, eps, code, model)) {
      blocks.push_back(cost);
    }
    for (const std::int64_t n_D : blocks) {
      if (d == 1 && n_D == 0) continue;
      const ArchitectureLayout layout{n_max, n_D, d, options.ancilla_factor, 0};
      out.push_back(evaluate_architecture(layout, eps, eps_th, model, k, options));
    }
  }
  return out;
}

FtOptimum optimize_ft(int k, std::int64_t n_max, double eps, double eps_th,
                      const DistillationModel& model, const FtOptions& options) {
  const std::vector<FtOptimum> candidates =
      ft_candidates(k, n_max, eps, eps_th, model, options);
  const double baseline = candidates.front().metric.value;
  const FtOptimum* best = &candidates.front();
  for (const FtOptimum& c : candidates) {
    if (c.metric.value > best->metric.value) best = &c;
  }
  FtOptimum result = *best;
  result.beats_unencoded = result.metric.value > baseline;
  return result;
}

}  // namespace qvest
