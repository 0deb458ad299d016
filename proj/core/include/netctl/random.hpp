#pragma once

#include <cstdint>

namespace netctl {

/// SplitMix64 (Steele, Lea, Flood 2014). The whole state is one 64-bit
/// counter advanced by 0x9E3779B97F4A7C15 and passed through mix(); every
/// step is integer arithmetic, so sequences are identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// Uniform in [0, 1) from the top 53 bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  /// Uniform in [0, bound) by rejection on the low end of the 2^64 range
  /// (Lemire's threshold, without the multiply trick). bound must be > 0.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

 private:
  std::uint64_t state_;
};

/// Seed for independent stream `stream` derived from a base seed:
/// mix(base + stream * golden), where golden is the SplitMix64 increment.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept {
  return SplitMix64::mix(base + stream * 0x9E3779B97F4A7C15ULL);
}

}  // namespace netctl
