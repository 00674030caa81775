#include "qvest/app/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <ostream>
#include <sstream>
#include <thread>

#include "qvest/format.hpp"
#include "qvest/synthesis.hpp"

namespace qvest::app {

std::string_view to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::NMax:
      return "n_max";
    case SweepVariable::Eps2:
      return "eps_2";
    case SweepVariable::EpsEff:
      return "eps_eff";
    case SweepVariable::EpsT:
      return "eps_T";
  }
  return "unknown";
}

SweepVariable sweep_variable_from_string(std::string_view name) {
  if (name == "n_max") return SweepVariable::NMax;
  if (name == "eps_2") return SweepVariable::Eps2;
  if (name == "eps_eff" || name == "eps") return SweepVariable::EpsEff;
  if (name == "eps_T") return SweepVariable::EpsT;
  throw ValidationError("unknown sweep variable '" + std::string(name) +
                        "' (expected n_max, eps_2, eps_eff or eps_T)");
}

void SweepRequest::validate() const {
  if (!(lo < hi)) throw ValidationError("sweep range needs lo < hi");
  if (points < 2) throw ValidationError("sweep needs at least 2 points");
  if (log_scale && !(lo > 0.0)) {
    throw ValidationError("log-scaled sweep needs lo > 0");
  }
  if (k_values.empty()) throw ValidationError("sweep needs at least one k");
  for (const int k : k_values) {
    if (k < 1) throw ValidationError("k = " + std::to_string(k) + " must be >= 1");
  }
  for (const double m : m_values) {
    if (!(m >= 0.0 && m <= 1.0)) {
      throw ValidationError("m = " + format_double(m) + " must lie in [0, 1]");
    }
  }
  if (variable == SweepVariable::NMax && !(lo >= 1.0)) {
    throw ValidationError("n_max sweep needs lo >= 1");
  }
  if (variable != SweepVariable::NMax && !(lo > 0.0 && hi < 1.0)) {
    throw ValidationError("error-rate sweeps need 0 < lo < hi < 1");
  }
  if (!(eps1_ratio >= 0.0)) throw ValidationError("eps1 ratio must be >= 0");
}

std::vector<double> SweepRequest::grid() const {
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    double x = log_scale
                   ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)))
                   : lo + t * (hi - lo);
    if (i == 0) x = lo;
    if (i == points - 1) x = hi;
    xs.push_back(x);
  }
  return xs;
}

namespace {

struct Job {
  int k;
  double m;
  double x;
};

SweepRow evaluate(const Job& job, const SweepRequest& req,
                  const DeviceSpec& spec, const Connectivity& device_conn) {
  SweepRow row;
  row.x = job.x;
  row.k = job.k;

  if (req.variable == SweepVariable::EpsT) {
    const SynthesisPlan plan = plan_synthesis(job.x, 0.0);
    const MetricEstimate metric =
        qv_closed_form(MetricQuery{job.k, spec.n_max, plan.eps_eff});
    row.m = 0.0;
    row.value = metric.value;
    row.regime = metric.regime;
    row.eps_eff = plan.eps_eff;
    return row;
  }

  std::int64_t n_max = spec.n_max;
  double eps = spec.connected_error();
  switch (req.variable) {
    case SweepVariable::NMax:
      n_max = std::max<std::int64_t>(1, std::llround(job.x));
      break;
    case SweepVariable::Eps2:
      eps = su4_error({std::min(job.x * req.eps1_ratio, 0.999999), job.x});
      break;
    case SweepVariable::EpsEff:
      eps = job.x;
      break;
    case SweepVariable::EpsT:
      break;
  }
  Connectivity conn = device_conn;
  conn.m = job.m;
  const Estimate e = estimate_point(spec, job.k, req.mode, n_max, eps, conn);
  row.m = e.m;
  row.value = e.metric.value;
  row.regime = e.metric.regime;
  row.d_c = e.d_c;
  row.n_D = e.n_D;
  row.eps_eff = e.eps_eff;
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepRequest& req, const DeviceSpec& spec) {
  req.validate();
  const bool uses_m =
      req.mode == Mode::Physical && req.variable != SweepVariable::EpsT;
  Connectivity conn;
  std::vector<double> ms{0.0};
  if (uses_m) {
    if (req.m_values.empty()) {
      conn = connectivity(spec);
      ms = {conn.m};
    } else {
      ms = req.m_values;
    }
  }

  std::vector<Job> jobs;
  const std::vector<double> xs = req.grid();
  for (const int k : req.k_values) {
    for (const double m : ms) {
      for (const double x : xs) jobs.push_back({k, m, x});
    }
  }

  std::vector<SweepRow> rows(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  const auto hw = static_cast<std::size_t>(std::thread::hardware_concurrency());
  const std::size_t workers = std::clamp<std::size_t>(hw, 1, jobs.size());
  auto work = [&](std::size_t w) {
    for (std::size_t i = w; i < jobs.size(); i += workers) {
      try {
        rows[i] = evaluate(jobs[i], req, spec, conn);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return rows;
}

void write_sweep_csv(const SweepRequest& req, std::span<const SweepRow> rows,
                     std::ostream& out) {
  out << to_string(req.variable) << ",k,m,metric_value,regime,d_c,n_D,eps_eff\n";
  for (const SweepRow& r : rows) {
    const std::string x = req.variable == SweepVariable::NMax
                              ? std::to_string(std::max<std::int64_t>(1, std::llround(r.x)))
                              : format_double(r.x);
    out << x << ',' << r.k << ',' << format_double(r.m) << ','
        << format_double(r.value) << ',' << to_string(r.regime) << ','
        << (r.d_c ? std::to_string(*r.d_c) : "") << ','
        << (r.n_D ? std::to_string(*r.n_D) : "") << ','
        << format_double(r.eps_eff) << '\n';
  }
}

std::string sweep_csv(const SweepRequest& req, const DeviceSpec& spec) {
  const std::vector<SweepRow> rows = run_sweep(req, spec);
  std::ostringstream out;
  write_sweep_csv(req, rows, out);
  return out.str();
}

}  // namespace qvest::app
