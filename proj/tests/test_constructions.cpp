#include "construct/constructions.hpp"
#include "formula/enumerate.hpp"
#include "formula/errors.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace thrcnf;

namespace {

// Claimed count, admissibility and count re-derived by brute force.
void expect_sound(const ConstructionResult& r) {
  ASSERT_LE(r.formula.num_vars(), 20U);
  EXPECT_TRUE(oracle::admissible(r.formula, r.t));
  EXPECT_EQ(BigInt(oracle::count_weight(r.formula, r.t)), r.claimed_count);
  EXPECT_TRUE(verify_construction(r).ok());
}

SetSystem family(unsigned n, std::initializer_list<std::initializer_list<Var>> sets) {
  std::vector<VarSet> v;
  for (auto s : sets) v.emplace_back(s);
  return SetSystem(n, v);
}

}  // namespace

TEST(SmallThreshold, SpecExamples) {
  const auto a = small_threshold_formula(6, 2, 3);
  EXPECT_EQ(a.claimed_count, 9);
  expect_sound(a);
  const auto b = small_threshold_formula(5, 0, 3);
  EXPECT_EQ(b.formula.size(), 5U);
  for (const auto& c : b.formula.clauses()) EXPECT_EQ(c.neg().size(), 1U);
  EXPECT_EQ(b.claimed_count, 1);
  expect_sound(b);
  const auto c = small_threshold_formula(7, 2, 3);
  EXPECT_EQ(c.formula.size(), 3U);
  EXPECT_EQ(c.claimed_count, 9);
  expect_sound(c);
  EXPECT_THROW(small_threshold_formula(5, 2, 3), InputError);
}

TEST(SmallThreshold, SweepIsSound) {
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned t = 0; t * k <= 10; ++t)
      for (unsigned n = std::max(1U, t * k); n <= 10; ++n) expect_sound(small_threshold_formula(n, t, k));
}

TEST(FullWindow, SpecExamples) {
  const auto a = full_window_formula(5, 3);
  EXPECT_EQ(a.t, 3U);
  EXPECT_EQ(a.claimed_count, 10);
  const auto b = full_window_formula(4, 4);
  EXPECT_EQ(b.formula.size(), 1U);
  EXPECT_EQ(b.t, 1U);
  EXPECT_EQ(b.claimed_count, 4);
  const auto c = full_window_formula(4, 2);
  EXPECT_EQ(c.formula.size(), 6U);
  EXPECT_EQ(c.t, 3U);
  EXPECT_EQ(c.claimed_count, 4);
  EXPECT_THROW(full_window_formula(2, 3), InputError);
  for (unsigned k = 1; k <= 5; ++k)
    for (unsigned b = k; b <= 10; ++b) expect_sound(full_window_formula(b, k));
}

TEST(Adaptive, SpecExamples) {
  const auto a = adaptive_block_formula(8, Ratio::make(1, 2), 3);
  EXPECT_EQ(AdaptiveParams::make(Ratio::make(1, 2), 3).b, 4U);
  EXPECT_EQ(a.t, 4U);
  EXPECT_EQ(a.claimed_count, 36);
  EXPECT_EQ(a.formula.size(), 8U);
  expect_sound(a);
  EXPECT_EQ(adaptive_block_formula(4, Ratio::make(1, 2), 3).formula, full_window_formula(4, 3).formula);
  const auto c = adaptive_block_formula(12, Ratio::make(2, 3), 3);
  EXPECT_EQ(c.t, 8U);
  EXPECT_EQ(c.claimed_count, 225);
  expect_sound(c);
}

TEST(Adaptive, DivisibilityErrors) {
  EXPECT_THROW(adaptive_block_formula(8, Ratio::make(1, 3), 3), InputError);  // b = 3 does not divide 8
  EXPECT_THROW(adaptive_block_formula(10, Ratio::make(2, 5), 3), InputError);  // b = 10/3
  EXPECT_THROW(adaptive_block_formula(8, Ratio::make(3, 2), 3), InputError);
  try {
    adaptive_block_formula(9, Ratio::make(1, 2), 3);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("divide"), std::string::npos);
  }
}

TEST(Product, SpecExamples) {
  const auto fw = full_window_formula(4, 2);
  const auto a = product_combine({fw, fw});
  EXPECT_EQ(a.formula.num_vars(), 8U);
  EXPECT_EQ(a.t, 6U);
  EXPECT_EQ(a.claimed_count, 16);
  expect_sound(a);
  EXPECT_EQ(product_combine({fw}).formula, fw.formula);
  const auto b = product_combine({full_window_formula(3, 2), fw});
  EXPECT_EQ(b.formula.num_vars(), 7U);
  EXPECT_EQ(b.t, 5U);
  EXPECT_EQ(b.claimed_count, 12);
  expect_sound(b);
  const auto mixed = product_combine({two_cnf_optimal(3, 1), small_threshold_formula(4, 1, 3)});
  expect_sound(mixed);
  EXPECT_THROW(product_combine({}), InputError);
}

TEST(TwoCnfOptimal, SpecExamples) {
  EXPECT_EQ(two_cnf_optimal(7, 5).claimed_count, 12);
  EXPECT_EQ(two_cnf_optimal(6, 3).claimed_count, 8);
  EXPECT_EQ(two_cnf_optimal(7, 3).claimed_count, 8);
  EXPECT_THROW(two_cnf_optimal(3, 4), InputError);
  for (unsigned n = 1; n <= 10; ++n)
    for (unsigned t = 0; t <= n; ++t) expect_sound(two_cnf_optimal(n, t));
}

TEST(BlockProduct, SoundAndAtLeastNamedConstructions) {
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned n = 1; n <= 10; ++n)
      for (unsigned t = 0; t <= n; ++t) {
        const auto r = block_product_formula(n, t, k);
        EXPECT_LE(r.formula.max_clause_width(), k);
        expect_sound(r);
        if (k * t <= n) EXPECT_GE(r.claimed_count, ipow(BigInt(k), t));
        if (k >= 2) EXPECT_GE(r.claimed_count, two_cnf_optimal(n, t).claimed_count);
        if (k <= n && t == n - k + 1) EXPECT_GE(r.claimed_count, binomial(n, k - 1));
      }
  EXPECT_EQ(block_product_formula(8, 4, 3).claimed_count, 36);
}

TEST(FromCover, SpecExamples) {
  // Every point of [5] in one of three 2-sets; threshold 2, width 3.
  const auto a = from_cover_design(family(5, {{1, 2}, {3, 4}, {4, 5}}), 5, 3);
  EXPECT_EQ(a.t, 2U);
  EXPECT_EQ(a.claimed_count, 7);
  expect_sound(a);
  const auto b = from_cover_design(SetSystem(3, {}), 3, 3);
  EXPECT_EQ(b.formula.size(), 0U);
  EXPECT_EQ(b.t, 0U);
  EXPECT_EQ(b.claimed_count, 1);
  const auto c = from_cover_design(family(4, {{1, 2}, {3, 4}}), 4, 2);
  EXPECT_EQ(BigInt(oracle::count_weight(c.formula, 2)), c.claimed_count);
  EXPECT_EQ(c.claimed_count, 4);
  expect_sound(c);
  try {
    from_cover_design(family(5, {{1, 2}, {3, 4}}), 5, 3);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("{5}"), std::string::npos);
  }
}

TEST(FromSteiner, SpecExamples) {
  const auto a = from_steiner(partition_design(6, 3), 6);
  EXPECT_EQ(a.formula.width(), 3U);
  EXPECT_EQ(a.t, 2U);
  EXPECT_EQ(a.claimed_count, 9);
  expect_sound(a);
  const auto b = from_steiner(partition_design(8, 4), 8);
  EXPECT_EQ(b.formula.width(), 4U);
  EXPECT_EQ(b.claimed_count, 16);
  expect_sound(b);
  const auto plane = from_steiner(projective_plane_13(), 13);
  EXPECT_EQ(plane.formula.num_vars(), 13U);
  EXPECT_EQ(plane.formula.width(), 9U);
  EXPECT_EQ(plane.t, 3U);
  EXPECT_EQ(plane.claimed_count, 234);
  expect_sound(plane);
}

TEST(FromSteiner, RejectsNonDesigns) {
  SetSystem doubled(6, {VarSet{1, 2, 3}, VarSet{3, 4, 5}});
  doubled.strength = 1;
  EXPECT_THROW(from_steiner(doubled, 6), InputError);
  EXPECT_THROW(from_steiner(SetSystem(6, {}), 6), InputError);
  // (4,2,1) partition: n = k + t, outside the construction's range.
  EXPECT_THROW(from_steiner(partition_design(4, 2), 4), InputError);
}

TEST(Method, NamesRoundTrip) {
  for (auto m : {Method::SmallThreshold, Method::FullWindow, Method::Adaptive, Method::Product,
                 Method::TwoCnfOptimal, Method::FromCover, Method::FromSteiner})
    EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_THROW(parse_method("bogus"), InputError);
}
