#include "construct/constructions.hpp"
#include "cover/cover.hpp"
#include "formula/dimacs.hpp"
#include "formula/errors.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

using namespace thrcnf;

namespace {

// Weight-t inputs covered by some disjunct, counted directly.
std::uint64_t covered(const std::vector<Formula>& ds, unsigned n, unsigned t) {
  std::vector<std::vector<oracle::Bits>> bits;
  for (const auto& f : ds) bits.push_back(oracle::bits_of(f));
  std::uint64_t c = 0;
  for (auto x : oracle::masks_of_weight(n, t))
    for (const auto& b : bits)
      if (oracle::sat(b, x)) {
        ++c;
        break;
      }
  return c;
}

}  // namespace

TEST(SplitMix64, ReferenceStream) {
  // Reference SplitMix64 outputs for seed 0.
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng.next(), 0x06C45D188009454FULL);
  EXPECT_EQ(rng.counter(), 3U);
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.below(7), b.below(7));
}

TEST(SplitMix64, PermutationsAreBijections) {
  SplitMix64 rng(5);
  std::vector<int> first_pos(6, 0);
  for (int i = 0; i < 600; ++i) {
    auto p = random_permutation(6, rng);
    ++first_pos[p[0] - 1];
    std::sort(p.begin(), p.end());
    for (unsigned v = 0; v < 6; ++v) EXPECT_EQ(p[v], v + 1);
  }
  for (int c : first_pos) EXPECT_GT(c, 50);
}

TEST(Permute, RenamesVariables) {
  const Formula f = full_window_formula(3, 2).formula;
  const Formula g = permute(small_threshold_formula(4, 2, 2).formula, {3, 4, 1, 2});
  EXPECT_EQ(g, small_threshold_formula(4, 2, 2).formula);
  EXPECT_EQ(permute(f, {2, 3, 1}), f);
  const Formula h = permute(two_cnf_optimal(4, 2).formula, {1, 3, 2, 4});
  EXPECT_EQ(oracle::count_weight(h, 2), oracle::count_weight(two_cnf_optimal(4, 2).formula, 2));
}

TEST(RandomCover, SpecExamples) {
  const Formula base = block_product_formula(4, 2, 2).formula;
  const Cover c = random_permutation_cover(base, 2, 12, 1);
  EXPECT_EQ(c.disjuncts.size(), 12U);
  EXPECT_TRUE(c.complete);
  EXPECT_TRUE(disjunction_equals_threshold(c));
  EXPECT_EQ(covered(c.disjuncts, 4, 2), 6U);

  const Cover none = random_permutation_cover(base, 2, 0, 1);
  EXPECT_TRUE(none.disjuncts.empty());
  EXPECT_FALSE(none.complete);
  EXPECT_EQ(none.covered_fraction, 0.0);

  const Cover big = random_permutation_cover(block_product_formula(8, 4, 3).formula, 4, 16, 7);
  EXPECT_EQ(big.disjuncts.size(), 16U);
  EXPECT_EQ(static_cast<std::uint64_t>(std::llround(big.covered_fraction * 70)), covered(big.disjuncts, 8, 4));
  EXPECT_THROW(random_permutation_cover(two_cnf_optimal(4, 2).formula, 3, 4, 1), InputError);
}

TEST(RandomCover, TwoCopiesOfTwoBlocks) {
  // Seeds 0, 1 and 3 give complete covers; 1 is frozen here.
  const Formula base = two_cnf_optimal(4, 2).formula;
  const Cover c = random_permutation_cover(base, 2, 2, 1);
  EXPECT_TRUE(c.complete);
  EXPECT_EQ(covered(c.disjuncts, 4, 2), 6U);
  EXPECT_NE(c.disjuncts[0], c.disjuncts[1]);
  EXPECT_FALSE(random_permutation_cover(base, 2, 2, 2).complete);
}

TEST(RandomCover, DeterministicAndPrefixStable) {
  const Formula base = block_product_formula(8, 4, 3).formula;
  const Cover a = random_permutation_cover(base, 4, 10, 3);
  const Cover b = random_permutation_cover(base, 4, 10, 3, 4);
  EXPECT_EQ(a.disjuncts, b.disjuncts);
  const Cover shorter = random_permutation_cover(base, 4, 6, 3);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(shorter.disjuncts[i], a.disjuncts[i]);
  EXPECT_LE(shorter.covered_fraction, a.covered_fraction);
  for (const auto& d : a.disjuncts) {
    EXPECT_TRUE(oracle::admissible(d, 4));
    EXPECT_EQ(oracle::count_weight(d, 4), 36U);
  }
}

TEST(Coverage, MatchesDirectCount) {
  const Formula base = block_product_formula(7, 3, 3).formula;
  const Cover c = random_permutation_cover(base, 3, 5, 11);
  const Coverage cov = check_coverage(c.disjuncts, 7, 3, 2);
  EXPECT_TRUE(cov.exhaustive);
  EXPECT_EQ(cov.checked, 35U);
  EXPECT_EQ(cov.covered, covered(c.disjuncts, 7, 3));
  const Coverage sampled = check_coverage({Formula::empty(14, 2)}, 14, 7, 1, 500, 9);
  EXPECT_FALSE(sampled.exhaustive);
  EXPECT_EQ(sampled.checked, 500U);
  EXPECT_EQ(sampled.covered, 500U);
}

TEST(GreedyCover, SpecExamples) {
  const Formula base = block_product_formula(4, 2, 2).formula;
  const Cover all = greedy_cover_from_pool(base, 2, all_permutations(4));
  EXPECT_EQ(all.disjuncts.size(), 2U);
  EXPECT_TRUE(all.complete);
  EXPECT_TRUE(disjunction_equals_threshold(all));

  const Cover six = greedy_cover(two_cnf_optimal(6, 3).formula, 3, 200, 1);
  EXPECT_TRUE(six.complete);
  EXPECT_GE(six.disjuncts.size(), 3U);
  EXPECT_LE(six.disjuncts.size(), 15U);
  EXPECT_TRUE(disjunction_equals_threshold(six));

  const Cover small = greedy_cover(two_cnf_optimal(6, 3).formula, 3, 1, 1);
  EXPECT_FALSE(small.complete);
  EXPECT_EQ(small.disjuncts.size(), 1U);
}

TEST(AllPermutations, CountAndOrder) {
  const auto p = all_permutations(4);
  EXPECT_EQ(p.size(), 24U);
  EXPECT_TRUE(std::is_sorted(p.begin(), p.end()));
  EXPECT_EQ(p.front(), (std::vector<std::uint32_t>{1, 2, 3, 4}));
}

TEST(CoverBounds, SpecExamples) {
  EXPECT_EQ(cover_bounds(6, 3, 2, 8, 8), std::make_pair(BigInt(3), BigInt(15)));
  EXPECT_EQ(cover_bounds(4, 2, 2, 4, 4), std::make_pair(BigInt(2), BigInt(6)));
  for (unsigned n = 1; n <= 8; ++n) EXPECT_EQ(cover_bounds(n, 0, 2, 1, 1), std::make_pair(BigInt(1), BigInt(n)));
  EXPECT_THROW(cover_bounds(4, 2, 2, 0, 4), InputError);
  EXPECT_THROW(cover_bounds(4, 2, 2, 4, 0), InputError);
}

TEST(EntropyBounds, SpecExamples) {
  const auto e = entropy_bounds(10, Ratio::make(1, 2));
  EXPECT_NEAR(static_cast<double>(e.lower), 1024 / std::sqrt(20.0), 1e-6);
  EXPECT_EQ(e.exact, 252);
  EXPECT_NEAR(static_cast<double>(e.upper), 1024 / std::sqrt(5 * M_PI), 1e-6);
  EXPECT_TRUE(e.holds);
  const auto two = entropy_bounds(2, Ratio::make(1, 2));
  EXPECT_NEAR(static_cast<double>(two.lower), 2.0, 1e-9);
  EXPECT_EQ(two.exact, 2);
  EXPECT_TRUE(two.holds);
  EXPECT_TRUE(entropy_bounds(60, Ratio::make(1, 3)).holds);
  EXPECT_THROW(entropy_bounds(10, Ratio::make(1, 3)), InputError);
  EXPECT_THROW(entropy_bounds(10, Ratio::make(1, 1)), InputError);
}

TEST(EntropyBounds, HoldWheneverDefined) {
  for (unsigned n = 2; n <= 120; ++n)
    for (long long d : {2, 3, 4, 5})
      for (long long a = 1; a < d; ++a)
        if ((n * a) % d == 0) EXPECT_TRUE(entropy_bounds(n, Ratio::make(a, d)).holds) << n << " " << a << "/" << d;
}

TEST(ConjectureRatio, SpecExamples) {
  const auto r = conjecture_ratio(8, Ratio::make(1, 2), 3);
  EXPECT_EQ(r.b, 4U);
  EXPECT_EQ(r.ratio, BigRational(70, 36));
  EXPECT_EQ(r.conditional_bound, 2);
  EXPECT_EQ(conjecture_ratio(4, Ratio::make(1, 2), 3).ratio, BigRational(1));
  const auto c = conjecture_ratio(12, Ratio::make(2, 3), 3);
  EXPECT_EQ(c.ratio, BigRational(11, 5));
  EXPECT_EQ(c.conditional_bound, 3);
  EXPECT_THROW(conjecture_ratio(9, Ratio::make(1, 2), 3), InputError);
}

TEST(WriteCover, ManifestAndFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "thrcnf_test_cover";
  std::filesystem::remove_all(dir);
  const Cover c = greedy_cover_from_pool(block_product_formula(4, 2, 2).formula, 2, all_permutations(4));
  const auto m = write_cover(c, dir.string());
  EXPECT_EQ(m["schema"], 1);
  EXPECT_EQ(m["n"], 4);
  EXPECT_EQ(m["method"], "greedy");
  EXPECT_TRUE(m["complete"].get<bool>());
  EXPECT_EQ(m["coverage"], "exhaustive");
  ASSERT_EQ(m["disjuncts"].size(), 2U);
  EXPECT_TRUE(std::filesystem::exists(dir / "manifest.json"));
  for (std::size_t i = 0; i < 2; ++i) {
    const std::string name = m["disjuncts"][i];
    const DimacsFile d = read_dimacs_file((dir / name).string());
    EXPECT_EQ(d.formula, c.disjuncts[i]);
    EXPECT_EQ(d.meta.at("t"), "2");
  }
  std::filesystem::remove_all(dir);
}
