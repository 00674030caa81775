#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qvest/app/device_spec.hpp"
#include "qvest/app/reports.hpp"

namespace qvest::app {

enum class SweepVariable { NMax, Eps2, EpsEff, EpsT };

std::string_view to_string(SweepVariable v);
SweepVariable sweep_variable_from_string(std::string_view name);

/// Parameter sweep over one variable.
///  - n_max: qubit count (rounded to the nearest integer, at least 1).
///  - eps_2: two-qubit gate error, eps_1 = eps1_ratio * eps_2.
///  - eps_eff: connected-pair error directly (routing n^m applied on top in
///    physical mode).
///  - eps_T: T-gate error with eps_L = 0 and optimal precision; mode and m
///    are ignored.
struct SweepRequest {
  SweepVariable variable = SweepVariable::NMax;
  double lo = 1.0;
  double hi = 2.0;
  int points = 2;
  bool log_scale = true;
  std::vector<int> k_values{1};
  std::vector<double> m_values;  // empty: the device's own connectivity
  Mode mode = Mode::Physical;
  double eps1_ratio = 0.1;

  void validate() const;
  std::vector<double> grid() const;
};

struct SweepRow {
  double x = 0.0;
  int k = 1;
  double m = 0.0;
  double value = 0.0;
  Regime regime = Regime::ErrorLimited;
  std::optional<int> d_c;
  std::optional<std::int64_t> n_D;
  double eps_eff = 0.0;
};

/// Rows ordered by k, then m, then grid point, whatever order the worker
/// threads finish in.
std::vector<SweepRow> run_sweep(const SweepRequest& req, const DeviceSpec& spec);

/// Header `<variable>,k,m,metric_value,regime,d_c,n_D,eps_eff`, LF endings.
void write_sweep_csv(const SweepRequest& req, std::span<const SweepRow> rows,
                     std::ostream& out);
std::string sweep_csv(const SweepRequest& req, const DeviceSpec& spec);

}  // namespace qvest::app
