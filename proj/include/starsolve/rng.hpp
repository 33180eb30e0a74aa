#pragma once

#include <cstdint>

namespace starsolve {

/// Identifier recorded in generated instance metadata. The generator never
/// uses std:: distributions, only the mappings below, so the same seed
/// reproduces the same instance on any platform or implementation.
inline constexpr const char* kRngId = "splitmix64-v1";

/// SplitMix64 (Steele, Lea, Vigna). Output sequence is fully determined by
/// the published constants.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1): the top 53 bits scaled by 2^-53.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound) as next() % bound. bound must be > 0.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace starsolve
