#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qvest/distillation.hpp"
#include "qvest/error.hpp"
#include "qvest/ft_architect.hpp"
#include "qvest/metrics.hpp"
#include "qvest/surface_code.hpp"
#include "qvest/synthesis.hpp"
#include "qvest/topology.hpp"
#include "qvest/validator.hpp"

namespace py = pybind11;
using namespace qvest;

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Volumetric benchmark and fault-tolerance resource estimates";

  auto error = py::register_exception<Error>(mod, "QvestError", PyExc_RuntimeError);
  py::register_exception<InvalidParameter>(mod, "InvalidParameter", error.ptr());
  py::register_exception<DisconnectedGraph>(mod, "DisconnectedGraph", error.ptr());
  py::register_exception<DegenerateFit>(mod, "DegenerateFit", error.ptr());
  py::register_exception<UnachievableTarget>(mod, "UnachievableTarget", error.ptr());

  mod.attr("DEFAULT_SUCCESS_THRESHOLD") = kDefaultSuccessThreshold;
  mod.attr("DEFAULT_CODE_THRESHOLD") = kDefaultCodeThreshold;

  py::enum_<Regime>(mod, "Regime")
      .value("QubitLimited", Regime::QubitLimited)
      .value("ErrorLimited", Regime::ErrorLimited);

  py::class_<MetricEstimate>(mod, "MetricEstimate")
      .def_readonly("value", &MetricEstimate::value)
      .def_readonly("regime", &MetricEstimate::regime)
      .def_readonly("n_opt", &MetricEstimate::n_opt)
      .def_readonly("depth_at_value", &MetricEstimate::depth_at_value)
      .def_readonly("width", &MetricEstimate::width)
      .def("__repr__", [](const MetricEstimate& e) {
        return "MetricEstimate(value=" + std::to_string(e.value) + ", regime=" +
               std::string(to_string(e.regime)) + ")";
      });

  mod.def("achievable_depth", &achievable_depth, py::arg("n"), py::arg("eps_eff"),
          py::arg("success_threshold") = kDefaultSuccessThreshold);
  mod.def(
      "qv_closed_form",
      [](int k, std::int64_t n_max, double eps, double m, double threshold) {
        return qv_closed_form({k, n_max, eps, threshold}, m);
      },
      py::arg("k"), py::arg("n_max"), py::arg("eps"), py::arg("m") = 0.0,
      py::arg("success_threshold") = kDefaultSuccessThreshold);
  mod.def(
      "qv_brute_force",
      [](int k, std::int64_t n_max, double eps, double m, double threshold) {
        return qv_brute_force({k, n_max, eps, threshold}, m);
      },
      py::arg("k"), py::arg("n_max"), py::arg("eps"), py::arg("m") = 0.0,
      py::arg("success_threshold") = kDefaultSuccessThreshold);

  mod.def(
      "average_swap_count",
      [](const std::string& kind, std::int64_t n) {
        return average_swap_count(TopologyGraph::make(topology_kind_from_string(kind), n));
      },
      py::arg("kind"), py::arg("n"));
  mod.def(
      "average_swap_count_edges",
      [](std::int64_t n, std::vector<Edge> edges) {
        return average_swap_count(TopologyGraph::custom(n, std::move(edges)));
      },
      py::arg("n"), py::arg("edges"));
  mod.def(
      "fit_connectivity_exponent",
      [](const std::string& kind, std::vector<std::int64_t> sizes) {
        const auto k = topology_kind_from_string(kind);
        if (sizes.empty()) sizes = default_fit_sizes(k);
        const auto fit = fit_connectivity_exponent(k, sizes);
        return py::make_tuple(fit.m_fit, fit.residual);
      },
      py::arg("kind"), py::arg("sizes") = std::vector<std::int64_t>{});
  mod.def("effective_error", py::overload_cast<double, std::int64_t, double>(&effective_error),
          py::arg("m"), py::arg("n"), py::arg("eps"));

  mod.def(
      "su4_error", [](double e1, double e2) { return su4_error({e1, e2}); },
      py::arg("eps_1"), py::arg("eps_2"));
  mod.def(
      "t_count", [](double p) { return t_count(p); }, py::arg("eps_P"));
  mod.def(
      "ft_effective_error",
      [](double p, double t, double l) { return ft_effective_error(p, t, l); },
      py::arg("eps_P"), py::arg("eps_T"), py::arg("eps_L"));
  mod.def(
      "optimal_precision", [](double t) { return optimal_precision(t).eps_P; },
      py::arg("eps_T"));

  mod.def("qubits_per_logical", &qubits_per_logical, py::arg("distance"));
  mod.def(
      "logical_error",
      [](double eps, int d, double th) { return logical_error(eps, {d, th}); },
      py::arg("eps"), py::arg("distance"), py::arg("threshold") = kDefaultCodeThreshold);
  mod.def("max_code_distance", &max_code_distance, py::arg("n_max"));

  py::class_<NaiveQecResult>(mod, "NaiveQecResult")
      .def_readonly("best_distance", &NaiveQecResult::best_distance)
      .def_readonly("logical_qubits", &NaiveQecResult::logical_qubits)
      .def_readonly("logical_error", &NaiveQecResult::logical_error)
      .def_readonly("metric", &NaiveQecResult::metric);
  mod.def("optimize_naive_qec", &optimize_naive_qec, py::arg("k"), py::arg("n_max"),
          py::arg("eps"), py::arg("eps_th") = kDefaultCodeThreshold);

  py::class_<DistillationOutcome>(mod, "DistillationOutcome")
      .def_readonly("levels", &DistillationOutcome::levels)
      .def_readonly("qubits_used", &DistillationOutcome::qubits_used)
      .def_readonly("eps_T", &DistillationOutcome::eps_T)
      .def_readonly("factory_distance", &DistillationOutcome::factory_distance);
  mod.def(
      "distill",
      [](std::int64_t budget, double eps, int data_distance) {
        return distill(budget, eps, {data_distance});
      },
      py::arg("budget"), py::arg("eps"), py::arg("data_distance") = 1);

  py::class_<ArchitectureLayout>(mod, "ArchitectureLayout")
      .def_readonly("n_max", &ArchitectureLayout::n_max)
      .def_readonly("n_D", &ArchitectureLayout::n_D)
      .def_readonly("d_c", &ArchitectureLayout::d_c)
      .def_readonly("ancilla_factor", &ArchitectureLayout::ancilla_factor)
      .def_readonly("n_L", &ArchitectureLayout::n_L);
  py::class_<FtOptimum>(mod, "FtOptimum")
      .def_readonly("layout", &FtOptimum::layout)
      .def_readonly("eps_L", &FtOptimum::eps_L)
      .def_readonly("eps_T", &FtOptimum::eps_T)
      .def_readonly("eps_P", &FtOptimum::eps_P)
      .def_readonly("eps_eff", &FtOptimum::eps_eff)
      .def_readonly("metric", &FtOptimum::metric)
      .def_readonly("beats_unencoded", &FtOptimum::beats_unencoded)
      .def_readonly("distillation_levels", &FtOptimum::distillation_levels)
      .def_readonly("factory_distance", &FtOptimum::factory_distance);
  mod.def(
      "optimize_ft",
      [](int k, std::int64_t n_max, double eps, double eps_th, double ancilla_factor) {
        FtOptions options;
        options.ancilla_factor = ancilla_factor;
        return optimize_ft(k, n_max, eps, eps_th, {}, options);
      },
      py::arg("k"), py::arg("n_max"), py::arg("eps"),
      py::arg("eps_th") = kDefaultCodeThreshold,
      py::arg("ancilla_factor") = kDefaultAncillaFactor);

  mod.def("exact_mean_depth", &exact_mean_depth, py::arg("n"), py::arg("eps_eff"));
  mod.def(
      "simulate_depth",
      [](std::int64_t n, double eps, std::int64_t trials, std::uint64_t seed) {
        const auto s = [&] {
          py::gil_scoped_release release;
          return simulate_depth_to_first_error({n, eps, trials, seed});
        }();
        return py::make_tuple(s.mean_depth, s.std_error);
      },
      py::arg("n"), py::arg("eps_eff"), py::arg("trials"), py::arg("seed") = 0);
  mod.def(
      "single_step_error_rate",
      [](std::int64_t n, double eps, std::int64_t trials, std::uint64_t seed) {
        py::gil_scoped_release release;
        return single_step_error_rate({n, eps, trials, seed});
      },
      py::arg("n"), py::arg("eps_eff"), py::arg("trials"), py::arg("seed") = 0);
}
