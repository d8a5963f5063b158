#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace thrcnf {

using Var = std::uint32_t;  // 1-based variable index

/// Set of 1-based variable indices.
///
/// Variable x_i lives in bit (i-1) of a little-endian word vector; the vector
/// never carries trailing zero words, so equal sets compare equal word-wise.
/// Formulas over at most 64 variables fit in a single word and every hot
/// kernel works on that word directly (see CompactCnf); larger sets fall back
/// to the multi-word form.
///
/// Ordering reads a set as a binary numeral with x1 as the most significant
/// digit, the same convention used to print and enumerate assignments: of two
/// sets, the one containing the smallest variable on which they differ is the
/// greater.
class VarSet {
 public:
  VarSet() = default;
  VarSet(std::initializer_list<Var> vars) {
    for (Var v : vars) insert(v);
  }
  static VarSet from_mask(std::uint64_t mask) {
    VarSet s;
    if (mask) s.words_.push_back(mask);
    return s;
  }

  void insert(Var v) {
    const std::size_t w = (v - 1) / 64;
    if (words_.size() <= w) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << ((v - 1) % 64);
  }
  void erase(Var v) {
    const std::size_t w = (v - 1) / 64;
    if (w >= words_.size()) return;
    words_[w] &= ~(std::uint64_t{1} << ((v - 1) % 64));
    trim();
  }
  bool contains(Var v) const {
    const std::size_t w = (v - 1) / 64;
    return w < words_.size() && ((words_[w] >> ((v - 1) % 64)) & 1U);
  }

  bool empty() const { return words_.empty(); }
  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  /// Largest member, 0 for the empty set.
  Var max_var() const {
    if (words_.empty()) return 0;
    return static_cast<Var>(64 * (words_.size() - 1) + 64 - std::countl_zero(words_.back()));
  }
  bool intersects(const VarSet& o) const {
    const std::size_t m = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < m; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool subset_of(const VarSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t ow = i < o.words_.size() ? o.words_[i] : 0;
      if (words_[i] & ~ow) return false;
    }
    return true;
  }

  VarSet operator|(const VarSet& o) const {
    VarSet r = words_.size() >= o.words_.size() ? *this : o;
    const VarSet& s = words_.size() >= o.words_.size() ? o : *this;
    for (std::size_t i = 0; i < s.words_.size(); ++i) r.words_[i] |= s.words_[i];
    return r;
  }
  VarSet operator&(const VarSet& o) const {
    VarSet r;
    r.words_.resize(std::min(words_.size(), o.words_.size()));
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    r.trim();
    return r;
  }
  VarSet operator-(const VarSet& o) const {
    VarSet r = *this;
    for (std::size_t i = 0; i < std::min(r.words_.size(), o.words_.size()); ++i) r.words_[i] &= ~o.words_[i];
    r.trim();
    return r;
  }

  std::vector<Var> elements() const {
    std::vector<Var> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        out.push_back(static_cast<Var>(64 * w + std::countr_zero(bits) + 1));
        bits &= bits - 1;
      }
    }
    return out;
  }

  /// Single-word view; nullopt when a member exceeds 64.
  std::optional<std::uint64_t> mask() const {
    if (words_.size() > 1) return std::nullopt;
    return words_.empty() ? 0 : words_[0];
  }
  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const VarSet&) const = default;
  std::strong_ordering operator<=>(const VarSet& o) const {
    const std::size_t m = std::max(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < m; ++i) {
      const std::uint64_t a = i < words_.size() ? words_[i] : 0;
      const std::uint64_t b = i < o.words_.size() ? o.words_[i] : 0;
      if (a != b) {
        const std::uint64_t low = (a ^ b) & (~(a ^ b) + 1);
        return (a & low) ? std::strong_ordering::greater : std::strong_ordering::less;
      }
    }
    return std::strong_ordering::equal;
  }

 private:
  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }
  std::vector<std::uint64_t> words_;
};

}  // namespace thrcnf
