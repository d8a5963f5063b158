#include "search/layers.hpp"

#include "formula/enumerate.hpp"
#include "formula/errors.hpp"

#include <bit>

namespace thrcnf {

Layers::Layers(unsigned n) : n_(n), layers_(n + 1), built_(n + 1, false), rank_(std::size_t{1} << n, 0) {
  if (n > 26) throw InputError("set-system searches support n <= 26");
}

const std::vector<std::uint64_t>& Layers::layer(unsigned s) {
  if (s > n_) throw InputError("layer size exceeds n");
  if (!built_[s]) {
    auto& out = layers_[s];
    for (std::uint64_t m : WeightRange(n_, s)) {
      rank_[m] = static_cast<std::uint32_t>(out.size());
      out.push_back(m);
    }
    built_[s] = true;
  }
  return layers_[s];
}

namespace {

void extend(std::uint64_t base, std::uint64_t pool, unsigned need, std::vector<std::uint64_t>& out) {
  if (need == 0) {
    out.push_back(base);
    return;
  }
  if (static_cast<unsigned>(std::popcount(pool)) < need) return;
  const std::uint64_t low = pool & (~pool + 1);
  extend(base | low, pool & ~low, need - 1, out);
  extend(base, pool & ~low, need, out);
}

}  // namespace

std::vector<std::uint64_t> Layers::supersets(std::uint64_t mask, unsigned s) const {
  std::vector<std::uint64_t> out;
  const unsigned have = static_cast<unsigned>(std::popcount(mask));
  if (s < have) return out;
  const std::uint64_t all = (std::uint64_t{1} << n_) - 1;
  extend(mask, all & ~mask, s - have, out);
  return out;
}

std::vector<std::uint64_t> Layers::subsets(std::uint64_t mask, unsigned s) {
  std::vector<std::uint64_t> out;
  extend(0, mask, s, out);
  return out;
}

}  // namespace thrcnf
