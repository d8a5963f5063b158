#pragma once

#include "formula/formula.hpp"

#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>

namespace thrcnf {

/// Maps an n-bit combination code (x1 = most significant bit) to the
/// internal mask (x1 = bit 0).
inline std::uint64_t code_to_mask(std::uint64_t code, unsigned n) {
  if (n == 0) return 0;
  std::uint64_t r = code;
  r = ((r >> 1) & 0x5555555555555555ULL) | ((r & 0x5555555555555555ULL) << 1);
  r = ((r >> 2) & 0x3333333333333333ULL) | ((r & 0x3333333333333333ULL) << 2);
  r = ((r >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((r & 0x0F0F0F0F0F0F0F0FULL) << 4);
  r = ((r >> 8) & 0x00FF00FF00FF00FFULL) | ((r & 0x00FF00FF00FF00FFULL) << 8);
  r = ((r >> 16) & 0x0000FFFF0000FFFFULL) | ((r & 0x0000FFFF0000FFFFULL) << 16);
  r = (r >> 32) | (r << 32);
  return r >> (64 - n);
}

/// Next integer with the same popcount ("Gosper's hack"); caller bounds it.
inline std::uint64_t next_same_popcount(std::uint64_t c) {
  const std::uint64_t u = c & (~c + 1);
  const std::uint64_t v = c + u;
  return v + (((v ^ c) / u) >> 2);
}

/// All weight-t masks over n <= 63 variables, in strictly increasing order of
/// the bitvector read as an integer with x1 as the most significant bit.
class WeightRange {
 public:
  class iterator {
   public:
    using value_type = std::uint64_t;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(std::uint64_t code, unsigned n, bool done) : code_(code), n_(n), done_(done) {}
    std::uint64_t operator*() const { return code_to_mask(code_, n_); }
    iterator& operator++() {
      if (code_ == 0) {
        done_ = true;
        return *this;
      }
      const std::uint64_t next = next_same_popcount(code_);
      if (next >> n_ || next < code_) done_ = true;
      code_ = next;
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || code_ == o.code_); }

   private:
    std::uint64_t code_ = 0;
    unsigned n_ = 0;
    bool done_ = true;
  };

  /// Throws InputError if t > n or n > 63.
  WeightRange(unsigned n, unsigned t);
  iterator begin() const { return iterator(first_, n_, false); }
  iterator end() const { return iterator(); }
  unsigned num_vars() const { return n_; }

 private:
  unsigned n_;
  std::uint64_t first_;
};

/// Stream of weight-t assignments in the canonical order of WeightRange.
class WeightStream {
 public:
  WeightStream(unsigned n, unsigned t) : range_(n, t), it_(range_.begin()) {}
  std::optional<Assignment> next() {
    if (it_ == range_.end()) return std::nullopt;
    Assignment a = Assignment::from_mask(range_.num_vars(), *it_);
    ++it_;
    return a;
  }

 private:
  WeightRange range_;
  WeightRange::iterator it_;
};

inline WeightStream enumerate_weight(unsigned n, unsigned t) { return WeightStream(n, t); }

/// The index-th weight-t code in increasing order (combinatorial unranking).
std::uint64_t unrank_weight_code(unsigned n, unsigned t, std::uint64_t index);

/// |sat_t(F)| by exhaustive enumeration; threads > 1 splits the range.
std::uint64_t count_weight_sat(const Formula& f, unsigned t, unsigned threads = 1);

struct AdmissibilityReport {
  bool admissible = true;
  std::optional<Assignment> witness;  // first satisfying assignment of weight < t
  unsigned t = 0;
};

AdmissibilityReport is_admissible(const Formula& f, unsigned t);

/// Exhaustive THR_t equivalence over all 2^n inputs; n <= 24.
bool equals_threshold(const std::function<bool(std::uint64_t)>& fn, unsigned n, unsigned t);

}  // namespace thrcnf
