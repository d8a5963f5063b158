#include "formula/enumerate.hpp"

#include "formula/bigint.hpp"
#include "formula/errors.hpp"

#include <algorithm>
#include <bit>
#include <thread>
#include <vector>

namespace thrcnf {

WeightRange::WeightRange(unsigned n, unsigned t) : n_(n) {
  if (n > 63) throw InputError("weight enumeration supports at most 63 variables");
  if (t > n) throw InputError("weight " + std::to_string(t) + " out of range for n = " + std::to_string(n));
  first_ = t == 0 ? 0 : (std::uint64_t{1} << t) - 1;
}

std::uint64_t unrank_weight_code(unsigned n, unsigned t, std::uint64_t index) {
  // Codes with popcount t ascending are the t-subsets of {0..n-1} in colex order.
  std::uint64_t code = 0;
  for (unsigned pos = t; pos >= 1; --pos) {
    unsigned x = pos - 1;
    while (x + 1 < n && binomial_u64(x + 1, pos) <= index) ++x;
    index -= binomial_u64(x, pos);
    code |= std::uint64_t{1} << x;
    n = x;
  }
  return code;
}

namespace {

std::uint64_t count_range(const CompactCnf& cnf, unsigned n, std::uint64_t code, std::uint64_t count) {
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (cnf.satisfied_by(code_to_mask(code, n))) ++hits;
    if (i + 1 < count) code = next_same_popcount(code);
  }
  return hits;
}

}  // namespace

std::uint64_t count_weight_sat(const Formula& f, unsigned t, unsigned threads) {
  const unsigned n = f.num_vars();
  if (t > n) throw InputError("weight " + std::to_string(t) + " out of range for n = " + std::to_string(n));
  const CompactCnf cnf(f);
  const std::uint64_t total = binomial_u64(n, t);
  const std::uint64_t first = t == 0 ? 0 : (std::uint64_t{1} << t) - 1;
  threads = std::max(1U, threads);
  if (threads == 1 || total < 4096) return count_range(cnf, n, first, total);

  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t begin = std::min(total, w * chunk);
    const std::uint64_t end = std::min(total, begin + chunk);
    if (begin == end) break;
    pool.emplace_back([&, w, begin, end] {
      partial[w] = count_range(cnf, n, unrank_weight_code(n, t, begin), end - begin);
    });
  }
  for (auto& th : pool) th.join();
  std::uint64_t sum = 0;
  for (auto p : partial) sum += p;
  return sum;
}

AdmissibilityReport is_admissible(const Formula& f, unsigned t) {
  const unsigned n = f.num_vars();
  if (t > n) throw InputError("weight " + std::to_string(t) + " out of range for n = " + std::to_string(n));
  AdmissibilityReport report;
  report.t = t;
  const CompactCnf cnf(f);
  for (unsigned w = 0; w < t; ++w) {
    for (std::uint64_t mask : WeightRange(n, w)) {
      if (cnf.satisfied_by(mask)) {
        report.admissible = false;
        report.witness = Assignment::from_mask(n, mask);
        return report;
      }
    }
  }
  return report;
}

bool equals_threshold(const std::function<bool(std::uint64_t)>& fn, unsigned n, unsigned t) {
  if (n > 24) throw RefusedError("threshold equivalence check limited to n <= 24");
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    const bool thr = static_cast<unsigned>(std::popcount(a)) >= t;
    if (fn(a) != thr) return false;
  }
  return true;
}

}  // namespace thrcnf
