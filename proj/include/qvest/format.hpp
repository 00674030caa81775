#pragma once

#include <string>

namespace qvest {

/// Shortest round-trip decimal form ("0.001", "1e-08", "nan", "inf").
/// Locale independent, so CSV/JSON output is byte-stable.
std::string format_double(double value);

}  // namespace qvest
