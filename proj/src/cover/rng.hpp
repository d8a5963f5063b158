#pragma once

#include <cstdint>
#include <vector>

namespace thrcnf {

/// Counter-based SplitMix64: the i-th output (i = 1, 2, ...) is
/// mix64(seed + i * 0x9E3779B97F4A7C15), with mix64 the SplitMix64
/// finaliser. The stream is identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}
  std::uint64_t next() { return mix64(seed_ + (++counter_) * 0x9E3779B97F4A7C15ULL); }
  /// Uniform integer in [0, bound) by rejection sampling; bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }
  std::uint64_t counter() const { return counter_; }

  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// Fisher-Yates shuffle of 1..n; result[i] is the image of variable i+1.
std::vector<std::uint32_t> random_permutation(unsigned n, SplitMix64& rng);

}  // namespace thrcnf
