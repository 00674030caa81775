#pragma once

#include <cstdint>

namespace qvest {

/// Counter-based generator: draw i of stream s under seed S is
///   mix64(key + (i + 1) * 0x9E3779B97F4A7C15),  key = mix64(S ^ mix64(s)),
/// where mix64 is the SplitMix64 finaliser. Any (seed, stream) pair can be
/// opened independently, so parallel trials reproduce exactly.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  /// Uniform in (0, 1]: top 53 bits plus one, scaled by 2^-53.
  double next_open_unit();

  static std::uint64_t mix64(std::uint64_t z);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace qvest
