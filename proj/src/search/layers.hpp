#pragma once

#include <cstdint>
#include <vector>

namespace thrcnf {

/// All s-subsets of [n] as masks (bit i-1 is element i), in the canonical
/// enumeration order, together with a dense rank table shared by all layers.
class Layers {
 public:
  /// n <= 26.
  explicit Layers(unsigned n);
  unsigned n() const { return n_; }
  const std::vector<std::uint64_t>& layer(unsigned s);
  /// Position of mask within its own layer.
  std::uint32_t rank(std::uint64_t mask) const { return rank_[mask]; }

  /// Supersets of `mask` with exactly s elements.
  std::vector<std::uint64_t> supersets(std::uint64_t mask, unsigned s) const;
  /// Subsets of `mask` with exactly s elements.
  static std::vector<std::uint64_t> subsets(std::uint64_t mask, unsigned s);

 private:
  unsigned n_;
  std::vector<std::vector<std::uint64_t>> layers_;
  std::vector<bool> built_;
  std::vector<std::uint32_t> rank_;
};

}  // namespace thrcnf
