#pragma once

#include "cover/rng.hpp"
#include "formula/bigint.hpp"
#include "formula/formula.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thrcnf {

enum class CoverMethod { Random, Greedy };
std::string to_string(CoverMethod m);
CoverMethod parse_cover_method(const std::string& tag);

/// Disjunction of t-admissible k-CNFs meant to express THR_t.
struct Cover {
  unsigned n = 0, t = 0, k = 0;
  std::vector<Formula> disjuncts;
  std::optional<std::uint64_t> seed;
  CoverMethod method = CoverMethod::Random;
  std::size_t pool_size = 0;
  bool complete = false;
  double covered_fraction = 0;
  /// Exhaustive for n <= 12, otherwise a uniform sample of weight-t inputs.
  bool exhaustive = true;
  std::uint64_t sample_size = 0;
};

/// Renames variable v to perm[v-1].
Formula permute(const Formula& f, const std::vector<std::uint32_t>& perm);

struct Coverage {
  std::uint64_t covered = 0;
  std::uint64_t checked = 0;
  bool exhaustive = true;
  double fraction() const { return checked ? static_cast<double>(covered) / static_cast<double>(checked) : 1.0; }
};

/// Weight-t inputs satisfied by at least one disjunct. Exhaustive for n <= 12;
/// above that `samples` uniform weight-t inputs drawn with `sample_seed`.
Coverage check_coverage(const std::vector<Formula>& disjuncts, unsigned n, unsigned t, unsigned threads = 1,
                        std::uint64_t samples = 200000, std::uint64_t sample_seed = 1);

/// `count` copies of `base` under independent uniform permutations drawn from
/// SplitMix64(seed). Throws InputError if base is not monotone and t-admissible.
Cover random_permutation_cover(const Formula& base, unsigned t, std::size_t count, std::uint64_t seed,
                               unsigned threads = 1);

/// Greedy set cover over `pool_size` random permutations of `base` (duplicate
/// images dropped by canonical hash): repeatedly takes the copy covering the
/// most uncovered weight-t inputs, lowest pool index on ties.
Cover greedy_cover(const Formula& base, unsigned t, std::size_t pool_size, std::uint64_t seed, unsigned threads = 1);

/// Greedy selection over an explicit list of permutations.
Cover greedy_cover_from_pool(const Formula& base, unsigned t, const std::vector<std::vector<std::uint32_t>>& pool,
                             unsigned threads = 1);

/// All n! permutations of 1..n in lexicographic order (n <= 10).
std::vector<std::vector<std::uint32_t>> all_permutations(unsigned n);

/// Exhaustive check that the disjunction equals THR_t on all 2^n inputs (n <= 24).
bool disjunction_equals_threshold(const Cover& cover);

/// ceil(C(n,t)/s) <= F(n,t,k) <= ceil(C(n,t) n / s_plus).
std::pair<BigInt, BigInt> cover_bounds(unsigned n, unsigned t, unsigned k, const BigInt& s_value,
                                       const BigInt& s_plus_value);

struct EntropyBounds {
  long double lower = 0;
  BigInt exact;
  long double upper = 0;
  bool holds = false;
};

/// 2^{nH(a)}/sqrt(8 n a(1-a)) <= C(n, a n) <= 2^{nH(a)}/sqrt(2 pi n a(1-a)).
EntropyBounds entropy_bounds(unsigned n, Ratio alpha);

struct ConjectureRatio {
  BigRational ratio;        // C(n, a n) / C(b, a b)^{n/b}
  BigInt conditional_bound;  // ceil(ratio)
  double exponent = 0;       // n/(k-1) * (1-a)/2 * log2(2 pi a (k-1))
  unsigned b = 0;
};

ConjectureRatio conjecture_ratio(unsigned n, Ratio alpha, unsigned k);

/// Writes disjunct_NNN.cnf files plus manifest.json into `dir` (created if
/// missing) and returns the manifest.
nlohmann::ordered_json write_cover(const Cover& cover, const std::string& dir);
nlohmann::ordered_json cover_manifest(const Cover& cover, const std::vector<std::string>& files);

}  // namespace thrcnf
