#include "cover/cover.hpp"

#include "construct/constructions.hpp"
#include "formula/dimacs.hpp"
#include "formula/enumerate.hpp"
#include "formula/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <numeric>
#include <set>
#include <thread>

namespace thrcnf {

std::vector<std::uint32_t> random_permutation(unsigned n, SplitMix64& rng) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 1U);
  for (unsigned i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

std::string to_string(CoverMethod m) { return m == CoverMethod::Random ? "random" : "greedy"; }

CoverMethod parse_cover_method(const std::string& tag) {
  if (tag == "random") return CoverMethod::Random;
  if (tag == "greedy") return CoverMethod::Greedy;
  throw InputError("unknown cover method '" + tag + "' (expected random or greedy)");
}

Formula permute(const Formula& f, const std::vector<std::uint32_t>& perm) {
  if (perm.size() != f.num_vars()) throw InputError("permutation length differs from the variable count");
  std::vector<Clause> clauses;
  clauses.reserve(f.size());
  for (const auto& c : f.clauses()) {
    VarSet pos, neg;
    for (Var v : c.pos().elements()) pos.insert(perm[v - 1]);
    for (Var v : c.neg().elements()) neg.insert(perm[v - 1]);
    clauses.emplace_back(std::move(pos), std::move(neg));
  }
  return Formula(f.num_vars(), f.width(), std::move(clauses));
}

namespace {

constexpr unsigned kExhaustiveMaxN = 12;

template <class Fn>
void parallel_chunks(std::size_t total, unsigned threads, Fn fn) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(total, 1))));
  if (threads == 1) {
    fn(0, total, 0);
    return;
  }
  std::vector<std::thread> workers;
  const std::size_t step = (total + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t lo = std::min(total, w * step), hi = std::min(total, lo + step);
    workers.emplace_back(fn, lo, hi, w);
  }
  for (auto& th : workers) th.join();
}

bool any_satisfies(const std::vector<CompactCnf>& cnfs, std::uint64_t m) {
  return std::any_of(cnfs.begin(), cnfs.end(), [m](const CompactCnf& c) { return c.satisfied_by(m); });
}

void require_base(const Formula& base, unsigned t) {
  if (!base.is_monotone()) throw InputError("cover base formula must be monotone");
  const auto rep = is_admissible(base, t);
  if (!rep.admissible)
    throw InputError("cover base formula is not " + std::to_string(t) + "-admissible (witness " + rep.witness->str() +
                     ")");
}

Cover finish(Cover c, unsigned threads) {
  const Coverage cov = check_coverage(c.disjuncts, c.n, c.t, threads);
  c.exhaustive = cov.exhaustive;
  c.sample_size = cov.exhaustive ? 0 : cov.checked;
  c.covered_fraction = cov.fraction();
  c.complete = cov.covered == cov.checked;
  return c;
}

}  // namespace

Coverage check_coverage(const std::vector<Formula>& disjuncts, unsigned n, unsigned t, unsigned threads,
                        std::uint64_t samples, std::uint64_t sample_seed) {
  if (t > n) throw InputError("coverage check needs t <= n");
  std::vector<CompactCnf> cnfs;
  for (const auto& f : disjuncts) cnfs.emplace_back(f);
  Coverage cov;
  std::vector<std::uint64_t> inputs;
  if (n <= kExhaustiveMaxN) {
    for (std::uint64_t m : WeightRange(n, t)) inputs.push_back(m);
  } else {
    cov.exhaustive = false;
    const BigInt total = binomial(n, t);
    SplitMix64 rng(sample_seed);
    const std::uint64_t range = total > BigInt(~std::uint64_t{0}) ? ~std::uint64_t{0} : to_u64(total);
    for (std::uint64_t i = 0; i < samples; ++i)
      inputs.push_back(code_to_mask(unrank_weight_code(n, t, rng.below(range)), n));
  }
  std::vector<std::uint64_t> partial(std::max(1U, threads), 0);
  parallel_chunks(inputs.size(), threads, [&](std::size_t lo, std::size_t hi, unsigned w) {
    std::uint64_t c = 0;
    for (std::size_t i = lo; i < hi; ++i) c += any_satisfies(cnfs, inputs[i]);
    partial[w] = c;
  });
  cov.covered = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  cov.checked = inputs.size();
  return cov;
}

Cover random_permutation_cover(const Formula& base, unsigned t, std::size_t count, std::uint64_t seed,
                               unsigned threads) {
  require_base(base, t);
  Cover c;
  c.n = base.num_vars();
  c.t = t;
  c.k = base.width();
  c.seed = seed;
  c.method = CoverMethod::Random;
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) c.disjuncts.push_back(permute(base, random_permutation(c.n, rng)));
  return finish(std::move(c), threads);
}

Cover greedy_cover_from_pool(const Formula& base, unsigned t, const std::vector<std::vector<std::uint32_t>>& pool,
                             unsigned threads) {
  require_base(base, t);
  const unsigned n = base.num_vars();
  if (binomial(n, t) > 5000000) throw RefusedError("greedy cover tracks every weight-t input; C(n,t) is too large");
  std::vector<Formula> candidates;
  std::set<std::string> seen;
  for (const auto& p : pool) {
    Formula f = permute(base, p);
    if (seen.insert(canonical_hash(f)).second) candidates.push_back(std::move(f));
  }
  std::vector<std::uint64_t> inputs;
  for (std::uint64_t m : WeightRange(n, t)) inputs.push_back(m);

  // sat[c] lists the input indices candidate c accepts.
  std::vector<std::vector<std::uint32_t>> sat(candidates.size());
  parallel_chunks(candidates.size(), threads, [&](std::size_t lo, std::size_t hi, unsigned) {
    for (std::size_t c = lo; c < hi; ++c) {
      const CompactCnf cnf(candidates[c]);
      for (std::uint32_t i = 0; i < inputs.size(); ++i)
        if (cnf.satisfied_by(inputs[i])) sat[c].push_back(i);
    }
  });

  Cover cover;
  cover.n = n;
  cover.t = t;
  cover.k = base.width();
  cover.method = CoverMethod::Greedy;
  cover.pool_size = candidates.size();
  std::vector<std::uint8_t> covered(inputs.size(), 0), used(candidates.size(), 0);
  std::size_t remaining = inputs.size();
  while (remaining > 0) {
    std::size_t best = candidates.size(), best_gain = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (used[c]) continue;
      std::size_t gain = 0;
      for (auto i : sat[c]) gain += !covered[i];
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    if (best == candidates.size()) break;
    used[best] = 1;
    for (auto i : sat[best])
      if (!covered[i]) {
        covered[i] = 1;
        --remaining;
      }
    cover.disjuncts.push_back(candidates[best]);
  }
  cover.complete = remaining == 0;
  cover.covered_fraction = inputs.empty() ? 1.0 : static_cast<double>(inputs.size() - remaining) / inputs.size();
  return cover;
}

Cover greedy_cover(const Formula& base, unsigned t, std::size_t pool_size, std::uint64_t seed, unsigned threads) {
  if (pool_size == 0) throw InputError("greedy_cover needs pool_size >= 1");
  SplitMix64 rng(seed);
  std::vector<std::vector<std::uint32_t>> pool;
  for (std::size_t i = 0; i < pool_size; ++i) pool.push_back(random_permutation(base.num_vars(), rng));
  Cover c = greedy_cover_from_pool(base, t, pool, threads);
  c.seed = seed;
  return c;
}

std::vector<std::vector<std::uint32_t>> all_permutations(unsigned n) {
  if (n > 10) throw RefusedError("all_permutations is limited to n <= 10");
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 1U);
  std::vector<std::vector<std::uint32_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool disjunction_equals_threshold(const Cover& cover) {
  std::vector<CompactCnf> cnfs;
  for (const auto& f : cover.disjuncts) cnfs.emplace_back(f);
  return equals_threshold([&](std::uint64_t m) { return any_satisfies(cnfs, m); }, cover.n, cover.t);
}

namespace {

BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

}  // namespace

std::pair<BigInt, BigInt> cover_bounds(unsigned n, unsigned t, unsigned /*k*/, const BigInt& s_value,
                                       const BigInt& s_plus_value) {
  if (t > n) throw InputError("cover_bounds needs t <= n");
  if (s_value <= 0 || s_plus_value <= 0) throw InputError("cover_bounds needs positive S and S+ values");
  const BigInt total = binomial(n, t);
  return {ceil_div(total, s_value), ceil_div(total * n, s_plus_value)};
}

EntropyBounds entropy_bounds(unsigned n, Ratio alpha) {
  if (alpha.num <= 0 || alpha.num >= alpha.den) throw InputError("entropy_bounds needs 0 < alpha < 1");
  if ((static_cast<std::int64_t>(n) * alpha.num) % alpha.den != 0)
    throw InputError("entropy_bounds needs alpha*n to be an integer");
  const unsigned an = static_cast<unsigned>(static_cast<std::int64_t>(n) * alpha.num / alpha.den);
  const long double a = static_cast<long double>(alpha.num) / static_cast<long double>(alpha.den);
  const long double h = -a * std::log2(a) - (1 - a) * std::log2(1 - a);
  const long double top = std::exp2(static_cast<long double>(n) * h);
  const long double v = static_cast<long double>(n) * a * (1 - a);
  EntropyBounds eb;
  eb.lower = top / std::sqrt(8 * v);
  eb.upper = top / std::sqrt(2 * std::numbers::pi_v<long double> * v);
  eb.exact = binomial(n, an);
  const long double exact = eb.exact.convert_to<long double>();
  eb.holds = eb.lower <= exact && exact <= eb.upper;
  return eb;
}

ConjectureRatio conjecture_ratio(unsigned n, Ratio alpha, unsigned k) {
  const AdaptiveParams p = AdaptiveParams::make(alpha, k);
  if (n % p.b != 0)
    throw InputError("conjecture_ratio needs b = " + std::to_string(p.b) + " to divide n = " + std::to_string(n));
  const unsigned blocks = n / p.b;
  const unsigned an = p.ones_per_block() * blocks;
  ConjectureRatio r;
  r.b = p.b;
  r.ratio = BigRational(binomial(n, an), ipow(binomial(p.b, p.ones_per_block()), blocks));
  r.conditional_bound = ceil_div(numerator(r.ratio), denominator(r.ratio));
  const double a = alpha.to_double();
  r.exponent = static_cast<double>(n) / (k - 1) * (1 - a) / 2 * std::log2(2 * std::numbers::pi * a * (k - 1));
  return r;
}

nlohmann::ordered_json cover_manifest(const Cover& cover, const std::vector<std::string>& files) {
  nlohmann::ordered_json j = {
      {"schema", 1},
      {"n", cover.n},
      {"t", cover.t},
      {"k", cover.k},
      {"method", to_string(cover.method)},
      {"seed", cover.seed ? nlohmann::ordered_json(*cover.seed) : nlohmann::ordered_json(nullptr)},
      {"disjuncts", files},
      {"complete", cover.complete},
      {"covered_fraction", cover.covered_fraction},
      {"coverage", cover.exhaustive ? "exhaustive" : "sampled"},
  };
  if (!cover.exhaustive) j["sample_size"] = cover.sample_size;
  if (cover.method == CoverMethod::Greedy) j["pool"] = cover.pool_size;
  return j;
}

nlohmann::ordered_json write_cover(const Cover& cover, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::vector<std::string> files;
  for (std::size_t i = 0; i < cover.disjuncts.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "disjunct_%03zu.cnf", i);
    write_dimacs_file((fs::path(dir) / name).string(), cover.disjuncts[i],
                      {{"t", std::to_string(cover.t)}, {"method", "cover-" + to_string(cover.method)}});
    files.emplace_back(name);
  }
  auto manifest = cover_manifest(cover, files);
  std::ofstream out(fs::path(dir) / "manifest.json");
  out << manifest.dump(2) << "\n";
  if (!out) throw InputError("cannot write manifest in " + dir);
  return manifest;
}

}  // namespace thrcnf
