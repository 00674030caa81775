#include "qvest/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "qvest/error.hpp"

namespace qvest {

namespace {

void check_connectivity(double m) {
  if (!(m >= 0.0 && m <= 1.0)) {
    throw InvalidParameter("connectivity exponent m must lie in [0, 1], got " +
                           std::to_string(m));
  }
}

void check_rate(double eps_eff) {
  if (!(eps_eff > 0.0 && eps_eff <= 1.0)) {
    throw InvalidParameter("eps_eff must lie in (0, 1], got " +
                           std::to_string(eps_eff));
  }
}

void check_threshold(double success_threshold) {
  if (!(success_threshold > 0.0 && success_threshold < 1.0)) {
    throw InvalidParameter("success_threshold must lie in (0, 1), got " +
                           std::to_string(success_threshold));
  }
}

// Real-valued width version of achievable_depth; the routing-scaled error is
// clamped at 1 like effective_error().
double depth_at_width(double width, double eps, double m, double budget) {
  if (width <= 0.0) return 0.0;
  const double eps_eff = std::min(1.0, std::pow(width, m) * eps);
  return budget / (width * eps_eff);
}

// pow(x, e) with exact shortcuts for the exponents the sweeps use most.
std::function<double(double)> power_fn(double e) {
  if (e == 0.0) return [](double) { return 1.0; };
  if (e == 1.0) return [](double x) { return x; };
  if (e == 0.5) return [](double x) { return std::sqrt(x); };
  return [e](double x) { return std::pow(x, e); };
}

std::function<double(double)> root_fn(int k) {
  if (k == 1) return [](double x) { return x; };
  if (k == 2) return [](double x) { return std::sqrt(x); };
  if (k == 3) return [](double x) { return std::cbrt(x); };
  const double inv = 1.0 / k;
  return [inv](double x) { return std::pow(x, inv); };
}

}  // namespace

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::QubitLimited:
      return "qubit-limited";
    case Regime::ErrorLimited:
      return "error-limited";
  }
  return "unknown";
}

void MetricQuery::validate() const {
  if (k < 1) throw InvalidParameter("k must be >= 1, got " + std::to_string(k));
  if (n_max < 1) {
    throw InvalidParameter("n_max must be >= 1, got " + std::to_string(n_max));
  }
  check_rate(eps_eff);
  check_threshold(success_threshold);
}

double depth_budget(double success_threshold) {
  check_threshold(success_threshold);
  if (success_threshold == kDefaultSuccessThreshold) return 1.0;
  return -std::log(success_threshold);
}

double achievable_depth(std::int64_t n, double eps_eff,
                        double success_threshold) {
  if (n < 1) throw InvalidParameter("n must be >= 1, got " + std::to_string(n));
  check_rate(eps_eff);
  return depth_budget(success_threshold) /
         (static_cast<double>(n) * eps_eff);
}

double crossover_width(int k, double eps, double m, double success_threshold) {
  if (k < 1) throw InvalidParameter("k must be >= 1, got " + std::to_string(k));
  check_rate(eps);
  check_connectivity(m);
  const double budget = depth_budget(success_threshold);
  return std::pow(budget / eps, 1.0 / (static_cast<double>(k) + m + 1.0));
}

MetricEstimate qv_closed_form(const MetricQuery& q, double m) {
  q.validate();
  check_connectivity(m);
  const double budget = depth_budget(q.success_threshold);

  MetricEstimate out;
  out.n_opt = crossover_width(q.k, q.eps_eff, m, q.success_threshold);
  const auto n_max = static_cast<double>(q.n_max);
  out.value = std::min(n_max, out.n_opt);
  out.regime = n_max < out.n_opt ? Regime::QubitLimited : Regime::ErrorLimited;
  out.width = out.value;
  out.depth_at_value = depth_at_width(out.width, q.eps_eff, m, budget);
  return out;
}

MetricEstimate qv_brute_force(const MetricQuery& q, double m) {
  q.validate();
  check_connectivity(m);
  if (q.n_max > kBruteForceLimit) {
    throw InvalidParameter("brute force is limited to n_max <= " +
                           std::to_string(kBruteForceLimit));
  }
  const double budget = depth_budget(q.success_threshold);
  const auto routing = power_fn(m);
  const auto root = root_fn(q.k);

  auto depth_of = [&](double n) {
    const double eps_n = std::min(1.0, routing(n) * q.eps_eff);
    return budget / (n * eps_n);
  };

  double best = -1.0;
  double best_width = 1.0;
  for (std::int64_t n = 1; n <= q.n_max; ++n) {
    const auto width = static_cast<double>(n);
    const double score = std::min(width, root(depth_of(width)));
    if (score > best) {
      best = score;
      best_width = width;
    }
  }

  MetricEstimate out;
  out.value = best;
  out.width = best_width;
  out.depth_at_value = depth_of(best_width);
  out.n_opt = crossover_width(q.k, q.eps_eff, m, q.success_threshold);
  const auto n_max = static_cast<double>(q.n_max);
  out.regime = n_max < root(depth_of(n_max)) ? Regime::QubitLimited
                                             : Regime::ErrorLimited;
  return out;
}

}  // namespace qvest
