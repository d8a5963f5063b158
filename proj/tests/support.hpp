#pragma once

// Brute-force reference implementations used as test oracles. They share no
// code with the library kernels beyond the Formula container itself.

#include "formula/formula.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

inline std::uint64_t pascal(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (unsigned i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (unsigned j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c[n][k];
}

// Clause as (positive bits, negative bits) read straight from its literals.
struct Bits {
  std::uint64_t pos = 0, neg = 0;
};

inline std::vector<Bits> bits_of(const thrcnf::Formula& f) {
  std::vector<Bits> out;
  for (const auto& c : f.clauses()) {
    Bits b;
    for (auto l : c.literals()) (l.negated() ? b.neg : b.pos) |= std::uint64_t{1} << (l.var() - 1);
    out.push_back(b);
  }
  return out;
}

inline bool sat(const std::vector<Bits>& cls, std::uint64_t x) {
  for (const auto& c : cls)
    if (!(c.pos & x) && !(c.neg & ~x)) return false;
  return true;
}

inline std::uint64_t count_weight(const thrcnf::Formula& f, unsigned t) {
  const auto cls = bits_of(f);
  std::uint64_t c = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << f.num_vars()); ++x)
    if (static_cast<unsigned>(std::popcount(x)) == t && sat(cls, x)) ++c;
  return c;
}

inline bool admissible(const thrcnf::Formula& f, unsigned t) {
  const auto cls = bits_of(f);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << f.num_vars()); ++x)
    if (static_cast<unsigned>(std::popcount(x)) < t && sat(cls, x)) return false;
  return true;
}

// Every weight-w mask over n bits.
inline std::vector<std::uint64_t> masks_of_weight(unsigned n, unsigned w) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
    if (static_cast<unsigned>(std::popcount(x)) == w) out.push_back(x);
  return out;
}

// S+(n,t,k) over monotone formulas with clauses of any width <= k. Enumerates
// the set H of m-sets (m = n-t) allowed to contain a clause; the largest
// formula compatible with H takes every set of size <= k whose m-supersets
// all lie in H. S+ = C(n,m) - min |H| over feasible H.
inline std::uint64_t splus_mixed_width(unsigned n, unsigned t, unsigned k) {
  const unsigned m = n - t;
  if (m + 1 > n) return 1;
  const auto msets = masks_of_weight(n, m);
  const auto usets = masks_of_weight(n, m + 1);
  std::vector<std::uint64_t> cands;
  for (unsigned w = 1; w <= std::min(k, n); ++w)
    for (auto c : masks_of_weight(n, w)) cands.push_back(c);
  std::vector<std::uint64_t> sup(cands.size(), 0);  // bit i: msets[i] contains the candidate
  for (std::size_t c = 0; c < cands.size(); ++c)
    for (std::size_t i = 0; i < msets.size(); ++i)
      if ((cands[c] & msets[i]) == cands[c]) sup[c] |= std::uint64_t{1} << i;
  auto feasible = [&](std::uint64_t h) {
    for (auto u : usets) {
      bool covered = false;
      for (std::size_t c = 0; c < cands.size() && !covered; ++c)
        covered = (cands[c] & u) == cands[c] && (sup[c] & ~h) == 0;
      if (!covered) return false;
    }
    return true;
  };
  const unsigned total = static_cast<unsigned>(msets.size());
  unsigned best = total;
  for (unsigned size = 0; size < total && best == total; ++size)
    for (std::uint64_t h : masks_of_weight(total, size))
      if (feasible(h)) {
        best = size;
        break;
      }
  return msets.size() - best;
}

// Smallest family of member_size-sets such that every target_size-set
// contains a member (member_inside_target) or lies inside one (otherwise).
inline unsigned min_family(unsigned n, unsigned member_size, unsigned target_size, bool member_inside_target) {
  const auto members = masks_of_weight(n, member_size);
  const auto targets = masks_of_weight(n, target_size);
  unsigned best = static_cast<unsigned>(members.size()) + 1;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << members.size()); ++fam) {
    const unsigned size = static_cast<unsigned>(std::popcount(fam));
    if (size >= best) continue;
    bool ok = true;
    for (auto tg : targets) {
      bool hit = false;
      for (std::size_t i = 0; i < members.size() && !hit; ++i)
        if ((fam >> i) & 1U)
          hit = member_inside_target ? (members[i] & tg) == members[i] : (members[i] & tg) == tg;
      if (!hit) {
        ok = false;
        break;
      }
    }
    if (ok) best = size;
  }
  return best;
}

inline unsigned turan(unsigned n, unsigned q, unsigned k) { return min_family(n, k, q, true); }
inline unsigned covering(unsigned n, unsigned q, unsigned k) { return min_family(n, q, k, false); }

// Maximal independent sets of size s in a graph given by adjacency masks.
inline std::uint64_t count_mis(unsigned n, const std::vector<std::uint64_t>& adj, unsigned s) {
  std::uint64_t count = 0;
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << n); ++set) {
    if (static_cast<unsigned>(std::popcount(set)) != s) continue;
    bool indep = true, maximal = true;
    for (unsigned v = 0; v < n; ++v)
      if ((set >> v) & 1U) indep = indep && !(adj[v] & set);
    for (unsigned v = 0; v < n && indep; ++v)
      if (!((set >> v) & 1U) && !(adj[v] & set)) maximal = false;
    if (indep && maximal) ++count;
  }
  return count;
}

// Uniformly random width <= 2 formula, not necessarily admissible.
inline thrcnf::Formula random_2cnf(unsigned n, unsigned clauses, std::mt19937_64& rng) {
  std::vector<thrcnf::Clause> cls;
  std::uniform_int_distribution<int> var(1, static_cast<int>(n));
  for (unsigned i = 0; i < clauses; ++i) {
    const int a = var(rng), b = var(rng);
    const thrcnf::Literal la{rng() & 1 ? a : -a}, lb{rng() & 1 ? b : -b};
    const thrcnf::Literal lits[2] = {la, lb};
    if (thrcnf::Clause::is_tautology(lits)) continue;
    cls.push_back(thrcnf::Clause::from_literals(lits));
  }
  return thrcnf::Formula(n, 2, std::move(cls));
}

}  // namespace oracle
