#pragma once

#include <cstdint>
#include <string_view>

namespace klts {

/// SplitMix64: state += 0x9E3779B97F4A7C15, output mixed by the two
/// multiply-xorshift rounds. uniform() = (next() >> 11)·2⁻⁵³ ∈ [0, 1).
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Box-Muller from two consecutive uniforms; no cached second value.
  double normal();
  std::uint64_t state() const { return state_; }

private:
  std::uint64_t state_;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view s);
/// Independent stream for a named property group: seed XOR fnv1a64(name).
SplitMix64 sub_stream(std::uint64_t seed, std::string_view name);

}  // namespace klts
