#include "formula/enumerate.hpp"
#include "formula/errors.hpp"
#include "search/layers.hpp"
#include "search/oracles.hpp"
#include "search/set_cover.hpp"
#include "search/splus.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace thrcnf;

namespace {

std::uint64_t value(const Certificate& c) { return to_u64(c.value); }

// S(n,t,2) over every 2-CNF on n <= 3 variables.
std::uint64_t brute_s2(unsigned n, unsigned t) {
  std::vector<oracle::Bits> all;
  for (unsigned a = 0; a < n; ++a)
    for (int sa = 0; sa < 2; ++sa) {
      const std::uint64_t ba = std::uint64_t{1} << a;
      all.push_back(sa ? oracle::Bits{0, ba} : oracle::Bits{ba, 0});
      for (unsigned b = a + 1; b < n; ++b)
        for (int sb = 0; sb < 2; ++sb) {
          const std::uint64_t bb = std::uint64_t{1} << b;
          oracle::Bits c{(sa ? 0 : ba) | (sb ? 0 : bb), (sa ? ba : 0) | (sb ? bb : 0)};
          all.push_back(c);
        }
    }
  std::uint64_t best = 0;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << all.size()); ++fam) {
    std::vector<oracle::Bits> cls;
    for (std::size_t i = 0; i < all.size(); ++i)
      if ((fam >> i) & 1U) cls.push_back(all[i]);
    bool ok = true;
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n) && ok; ++x) {
      const unsigned w = static_cast<unsigned>(std::popcount(x));
      if (!oracle::sat(cls, x)) continue;
      if (w < t) ok = false;
      if (w == t) ++count;
    }
    if (ok) best = std::max(best, count);
  }
  return best;
}

SearchLimits budget(std::uint64_t nodes) {
  SearchLimits l;
  l.max_nodes = nodes;
  return l;
}

}  // namespace

TEST(Layers, RanksAndSupersets) {
  Layers layers(6);
  EXPECT_EQ(layers.layer(3).size(), oracle::pascal(6, 3));
  for (std::size_t i = 0; i < layers.layer(2).size(); ++i) EXPECT_EQ(layers.rank(layers.layer(2)[i]), i);
  EXPECT_EQ(layers.supersets(0b11, 3).size(), 4U);
  EXPECT_EQ(Layers::subsets(0b111, 2).size(), 3U);
}

TEST(SPlus, SpecExamples) {
  const Certificate a = exact_monotone_S(6, 2, 3);
  EXPECT_EQ(value(a), 9U);
  EXPECT_TRUE(a.verified);
  EXPECT_EQ(a.bound_type, BoundType::Exact);
  EXPECT_EQ(value(exact_monotone_S(5, 2, 3)), 7U);
  for (unsigned k = 2; k <= 4; ++k)
    for (unsigned n = k; n <= 8; ++n)
      EXPECT_EQ(exact_monotone_S(n, n - k + 1, k).value, binomial(n, k - 1)) << n << " " << k;
}

TEST(SPlus, WitnessIsVerifiedFormula) {
  const Certificate c = exact_monotone_S(7, 3, 3);
  const auto& f = std::get<Formula>(c.witness);
  EXPECT_TRUE(f.is_monotone());
  EXPECT_LE(f.max_clause_width(), 3U);
  EXPECT_TRUE(oracle::admissible(f, 3));
  EXPECT_EQ(oracle::count_weight(f, 3), value(c));
}

TEST(SPlus, MatchesMixedWidthBruteForce) {
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned n = 1; n <= 6; ++n)
      for (unsigned t = 0; t <= n; ++t)
        EXPECT_EQ(value(exact_monotone_S(n, t, k)), oracle::splus_mixed_width(n, t, k))
            << "n=" << n << " t=" << t << " k=" << k;
}

TEST(SPlus, ClosedFormAtWidthTwo) {
  for (unsigned n = 1; n <= 10; ++n)
    for (unsigned t = 0; t <= n; ++t) {
      const BigInt expected = t == n ? BigInt(1) : song_yao_bound(n, n - t);
      EXPECT_EQ(exact_monotone_S(n, t, 2).value, expected) << n << " " << t;
    }
}

TEST(SPlus, FrozenValues) {
  // Values computed once by the search and cross-checked against the
  // constructions and the Turan identity.
  EXPECT_EQ(value(exact_monotone_S(8, 4, 3)), 36U);
  EXPECT_EQ(value(exact_monotone_S(10, 3, 3)), 27U);
  EXPECT_EQ(value(exact_monotone_S(7, 4, 3)), oracle::pascal(7, 3) - 12);
}

TEST(SPlus, LimitsAndBudget) {
  EXPECT_THROW(exact_monotone_S(13, 5, 3), RefusedError);
  EXPECT_THROW(exact_monotone_S(10, 5, 3, budget(5)), RefusedError);
  EXPECT_THROW(exact_monotone_S(3, 4, 2), InputError);
  try {
    exact_monotone_S(17, 8, 2);
    FAIL();
  } catch (const RefusedError& e) {
    EXPECT_NE(std::string(e.what()).find("17"), std::string::npos);
  }
}

TEST(SPlus, GapFlag) {
  EXPECT_FALSE(exact_monotone_S(6, 2, 3).s_gap);  // kt <= n
  EXPECT_FALSE(exact_monotone_S(6, 3, 2).s_gap);
  EXPECT_TRUE(exact_monotone_S(8, 4, 3).s_gap);
  EXPECT_TRUE(s_equals_s_plus_known(7, 4, 3));  // t = n - k
  EXPECT_FALSE(s_equals_s_plus_known(8, 4, 3));
}

TEST(Turan, SpecExamples) {
  EXPECT_EQ(value(turan_number(4, 4, 3)), 1U);
  EXPECT_EQ(value(turan_number(5, 4, 3)), 3U);
  EXPECT_EQ(value(turan_number(5, 3, 2)), 4U);
}

TEST(Turan, MatchesBruteForce) {
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned q = 1; q <= n; ++q)
      for (unsigned k = 1; k <= q; ++k) {
        if (oracle::pascal(n, k) > 20) continue;
        const Certificate c = turan_number(n, q, k);
        EXPECT_EQ(value(c), oracle::turan(n, q, k)) << n << " " << q << " " << k;
        EXPECT_TRUE(c.verified);
        EXPECT_EQ(std::get<SetSystem>(c.witness).size(), value(c));
      }
}

TEST(Turan, FrozenValues) {
  EXPECT_EQ(value(turan_number(6, 4, 3)), 6U);
  EXPECT_EQ(value(turan_number(7, 4, 3)), 12U);
  EXPECT_EQ(value(turan_number(8, 4, 3)), 20U);
}

TEST(Covering, SpecExamples) {
  EXPECT_EQ(value(covering_number(5, 2, 1)), 3U);
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(value(covering_number(n, n, k)), 1U);
  EXPECT_EQ(value(covering_number(4, 3, 2)), 3U);
}

TEST(Covering, MatchesBruteForce) {
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned q = 1; q <= n; ++q)
      for (unsigned k = 1; k <= q; ++k) {
        if (oracle::pascal(n, q) > 20) continue;
        EXPECT_EQ(value(covering_number(n, q, k)), oracle::covering(n, q, k)) << n << " " << q << " " << k;
      }
}

TEST(TuranIdentity, SpecExamples) {
  const auto r = verify_turan_identity(5, 3);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(value(*r.turan), 3U);
  EXPECT_EQ(value(*r.cover), 3U);
  EXPECT_EQ(value(*r.splus), 7U);
  EXPECT_EQ(r.complement, 3);
  const auto r2 = verify_turan_identity(4, 2);
  EXPECT_TRUE(r2.holds);
  EXPECT_EQ(value(*r2.turan), 2U);
  const auto r3 = verify_turan_identity(3, 3);
  EXPECT_TRUE(r3.skipped);
  EXPECT_FALSE(r3.notice.empty());
}

TEST(TuranIdentity, HoldsForSmallN) {
  for (unsigned k = 2; k <= 3; ++k)
    for (unsigned n = k + 1; n <= 7; ++n) EXPECT_TRUE(verify_turan_identity(n, k).holds) << n << " " << k;
}

TEST(MedianOracle, SpecExamples) {
  EXPECT_EQ(value(median_closed_oracle(4, 2)), 4U);
  EXPECT_EQ(value(median_closed_oracle(4, 3)), 4U);
  EXPECT_EQ(value(median_closed_oracle(3, 2)), 3U);
}

TEST(MedianOracle, MatchesAllTwoCnfsAtTinyN) {
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned t = 0; t <= n; ++t) EXPECT_EQ(value(median_closed_oracle(n, t)), brute_s2(n, t)) << n << " " << t;
}

TEST(MedianOracle, EqualsMonotoneOptimum) {
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned t = 0; t <= n; ++t)
      EXPECT_EQ(median_closed_oracle(n, t).value, exact_monotone_S(n, t, 2).value) << n << " " << t;
}

TEST(MaxMis, SpecExamples) {
  const Certificate a = max_mis_over_graphs(6, 2);
  EXPECT_EQ(value(a), 9U);
  const auto& g = std::get<ConflictGraph>(a.witness);
  EXPECT_EQ(g.num_edges(), 6U);
  EXPECT_EQ(count_max_independent_sets(g, 2), 9U);
  EXPECT_EQ(value(max_mis_over_graphs(5, 2)), 6U);
  // K_n has n maximal independent sets of size one.
  for (unsigned n = 1; n <= 5; ++n) EXPECT_EQ(value(max_mis_over_graphs(n, 1)), n);
  EXPECT_THROW(max_mis_over_graphs(7, 2), RefusedError);
}

TEST(MaxMis, EqualsSongYao) {
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned s = 1; s <= n; ++s) EXPECT_EQ(max_mis_over_graphs(n, s).value, song_yao_bound(n, s));
}

TEST(Uniqueness, SpecExamples) {
  const auto a = uniqueness_probe(6, 2, 3);
  EXPECT_EQ(a.optimum, 9U);
  EXPECT_TRUE(a.all_have_disjoint_clauses);
  EXPECT_EQ(a.optima, a.with_disjoint_clauses);
  const auto b = uniqueness_probe(4, 2, 2);
  EXPECT_TRUE(b.all_have_disjoint_clauses);
  for (unsigned k = 1; k <= 5; ++k) {
    const auto c = uniqueness_probe(k, 1, k);
    EXPECT_EQ(c.optima, 1U);
    EXPECT_EQ(c.optimum, k);
  }
  EXPECT_THROW(uniqueness_probe(5, 2, 3), InputError);
}

TEST(Certificate, JsonShape) {
  const Json j = certificate_to_json(exact_monotone_S(5, 2, 3));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["quantity"], "S_plus");
  EXPECT_EQ(j["params"]["n"], 5);
  EXPECT_EQ(j["value"], 7);
  EXPECT_EQ(j["bound_type"], "exact");
  EXPECT_TRUE(j["witness_file"].is_null());
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_TRUE(j.contains("elapsed_ms"));
  EXPECT_TRUE(j.contains("nodes_explored"));
  EXPECT_EQ(j["witness"]["kind"], "formula");
  const Json t = certificate_to_json(turan_number(5, 4, 3));
  EXPECT_EQ(t["quantity"], "Turan");
  EXPECT_FALSE(t.contains("s_gap"));
}
