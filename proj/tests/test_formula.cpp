#include "formula/bigint.hpp"
#include "formula/dimacs.hpp"
#include "formula/enumerate.hpp"
#include "formula/errors.hpp"
#include "formula/formula.hpp"
#include "formula/set_system.hpp"
#include "construct/constructions.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace thrcnf;

namespace {

Formula parse(unsigned n, std::initializer_list<std::initializer_list<int>> clauses, unsigned width = 0) {
  std::vector<Clause> cls;
  unsigned w = 1;
  for (auto c : clauses) {
    std::vector<Literal> lits;
    for (int l : c) lits.push_back(Literal{l});
    cls.push_back(Clause::from_literals(lits));
    w = std::max<unsigned>(w, static_cast<unsigned>(c.size()));
  }
  return Formula(n, width ? width : w, std::move(cls));
}

}  // namespace

TEST(VarSet, OrderingReadsX1AsMostSignificant) {
  EXPECT_GT((VarSet{1}), (VarSet{2, 3}));
  EXPECT_LT((VarSet{3}), (VarSet{2}));
  EXPECT_EQ((VarSet{1, 2}).elements(), (std::vector<Var>{1, 2}));
  VarSet big{3, 70};
  EXPECT_EQ(big.max_var(), 70U);
  EXPECT_FALSE(big.mask().has_value());
  big.erase(70);
  EXPECT_EQ(big, VarSet{3});
}

TEST(Clause, RejectsEmptyAndTautologies) {
  EXPECT_THROW(Clause({}, {}), InputError);
  EXPECT_THROW(Clause::from_literals({Literal::pos(1), Literal::neg(1)}), InputError);
  const Clause c = Clause::from_literals({Literal::neg(2), Literal::pos(1), Literal::pos(1)});
  EXPECT_EQ(c.width(), 2U);
  EXPECT_FALSE(c.is_monotone());
}

TEST(Formula, EvaluateExamples) {
  const Formula f = parse(2, {{1, 2}});
  EXPECT_FALSE(evaluate(f, Assignment::parse("00")));
  EXPECT_TRUE(evaluate(f, Assignment::parse("10")));
  const Formula g = parse(2, {{-1, 2}});
  EXPECT_FALSE(evaluate(g, Assignment::parse("10")));
  EXPECT_THROW(evaluate(f, Assignment::parse("101")), InputError);
}

TEST(Formula, CanonicalFormIgnoresClauseOrderAndDuplicates) {
  const Formula a = parse(4, {{1, 2}, {3}, {-4, 2}});
  const Formula b = parse(4, {{-4, 2}, {3}, {2, 1}, {1, 2}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(canonical_hash(a), canonical_hash(b));
  EXPECT_NE(canonical_hash(a), canonical_hash(parse(4, {{1, 2}, {3}})));
}

TEST(Formula, RejectsOutOfRangeAndOverWide) {
  EXPECT_THROW(parse(2, {{1, 3}}), InputError);
  EXPECT_THROW(parse(3, {{1, 2, 3}}, 2), InputError);
}

TEST(Formula, MonotoneAndWidthProfile) {
  const Formula f = parse(3, {{1, 2}, {3}});
  EXPECT_TRUE(is_monotone(f));
  EXPECT_EQ(width_profile(f), (std::vector<unsigned>{1, 2}));
  EXPECT_FALSE(is_monotone(parse(2, {{-1, 2}})));
  const auto fw = full_window_formula(5, 3).formula;
  EXPECT_TRUE(is_monotone(fw));
  EXPECT_EQ(width_profile(fw), std::vector<unsigned>(10, 3));
}

TEST(Enumerate, SmallExamples) {
  auto s = enumerate_weight(3, 0);
  EXPECT_EQ(s.next()->str(), "000");
  EXPECT_FALSE(s.next());
  std::vector<std::string> got;
  auto s2 = enumerate_weight(3, 2);
  while (auto a = s2.next()) got.push_back(a->str());
  EXPECT_EQ(got, (std::vector<std::string>{"011", "101", "110"}));
  EXPECT_THROW(WeightRange(3, 4), InputError);
}

TEST(Enumerate, LengthsMatchPascal) {
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned t = 0; t <= n; ++t) {
      std::uint64_t len = 0, prev = 0;
      bool increasing = true;
      for (std::uint64_t m : WeightRange(n, t)) {
        std::uint64_t code = 0;
        for (unsigned v = 0; v < n; ++v)
          if ((m >> v) & 1U) code |= std::uint64_t{1} << (n - 1 - v);
        if (len && code <= prev) increasing = false;
        prev = code;
        ++len;
      }
      EXPECT_EQ(len, oracle::pascal(n, t)) << n << " " << t;
      EXPECT_TRUE(increasing);
    }
  std::uint64_t len = 0;
  for ([[maybe_unused]] auto m : WeightRange(20, 10)) ++len;
  EXPECT_EQ(len, 184756U);
}

TEST(Enumerate, UnrankMatchesIteration) {
  std::uint64_t i = 0;
  for (std::uint64_t m : WeightRange(9, 4)) {
    EXPECT_EQ(code_to_mask(unrank_weight_code(9, 4, i), 9), m);
    ++i;
  }
}

TEST(Count, SpecExamples) {
  EXPECT_EQ(count_weight_sat(full_window_formula(5, 3).formula, 3), 10U);
  EXPECT_EQ(count_weight_sat(Formula::empty(3, 1), 1), 3U);
  EXPECT_EQ(count_weight_sat(adaptive_block_formula(8, Ratio::make(1, 2), 3).formula, 4), 36U);
  EXPECT_THROW(count_weight_sat(Formula::empty(3, 1), 4), InputError);
}

TEST(Count, MatchesBruteForceOnRandomFormulas) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 10);
    const Formula f = oracle::random_2cnf(n, static_cast<unsigned>(rng() % 8), rng);
    for (unsigned t = 0; t <= n; ++t) {
      EXPECT_EQ(count_weight_sat(f, t), oracle::count_weight(f, t));
      EXPECT_EQ(count_weight_sat(f, t, 3), oracle::count_weight(f, t));
      EXPECT_EQ(is_admissible(f, t).admissible, oracle::admissible(f, t));
    }
  }
}

TEST(Admissible, SpecExamples) {
  EXPECT_TRUE(is_admissible(small_threshold_formula(6, 2, 3).formula, 2).admissible);
  const auto empty = is_admissible(Formula::empty(4, 1), 1);
  EXPECT_FALSE(empty.admissible);
  EXPECT_EQ(empty.witness->str(), "0000");
  const auto fw = is_admissible(full_window_formula(5, 3).formula, 4);
  EXPECT_FALSE(fw.admissible);
  EXPECT_EQ(fw.witness->weight(), 3U);
}

TEST(Threshold, EqualsThreshold) {
  EXPECT_TRUE(equals_threshold([](std::uint64_t x) { return std::popcount(x) >= 3; }, 6, 3));
  EXPECT_FALSE(equals_threshold([](std::uint64_t x) { return std::popcount(x) >= 2; }, 6, 3));
}

TEST(Dimacs, RoundTripRandomFormulas) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 12);
    const Formula f = oracle::random_2cnf(n, static_cast<unsigned>(rng() % 10), rng);
    const Metadata meta{{"method", "random"}, {"t", std::to_string(rng() % (n + 1))}};
    const DimacsFile back = parse_dimacs(write_dimacs(f, meta));
    EXPECT_EQ(back.formula.clauses(), f.clauses());
    EXPECT_EQ(back.formula.num_vars(), f.num_vars());
    EXPECT_EQ(back.meta.at("method"), "random");
    EXPECT_EQ(write_dimacs(back.formula, back.meta), write_dimacs(f, back.meta));
  }
}

TEST(Dimacs, WidthFromMetadata) {
  const auto d = parse_dimacs("c thrcnf k=3\np cnf 3 1\n1 2 0\n");
  EXPECT_EQ(d.formula.width(), 3U);
  EXPECT_EQ(parse_dimacs("p cnf 3 1\n1 -2 0\n").formula.width(), 2U);
}

TEST(Dimacs, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_dimacs(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 999;
  };
  EXPECT_EQ(line_of("c hi\np cnf 3 1\n1 x 0\n"), 3U);
  EXPECT_EQ(line_of("1 2 0\n"), 1U);
  EXPECT_EQ(line_of("p cnf 2 1\n1 5 0\n"), 2U);
  EXPECT_EQ(line_of("p cnf 2 1\n1 -1 0\n"), 2U);
  EXPECT_THROW(parse_dimacs("p cnf 2 2\n1 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);
}

TEST(Bigint, BinomialsMatchPascal) {
  for (unsigned n = 0; n <= 60; ++n)
    for (unsigned k = 0; k <= n + 1; ++k) EXPECT_EQ(binomial(n, k), BigInt(oracle::pascal(n, k)));
  EXPECT_EQ(binomial(200, 100).str(), "90548514656103281165404177077484163874504589675413336841320");
  EXPECT_THROW(binomial_u64(100, 50), InputError);
}

TEST(Ratio, ParsesAndReduces) {
  EXPECT_EQ(Ratio::parse("2/4"), Ratio::make(1, 2));
  EXPECT_EQ(Ratio::parse("3").den, 1);
  EXPECT_THROW(Ratio::parse("1/0"), InputError);
  EXPECT_THROW(Ratio::parse("a/b"), InputError);
}

TEST(SetSystem, JsonRoundTripAndCatalogue) {
  const SetSystem plane = projective_plane_13();
  EXPECT_EQ(plane.size(), 13U);
  EXPECT_EQ(plane.uniform_size(), 4U);
  const SetSystem back = parse_set_system_json(set_system_to_json(plane));
  EXPECT_EQ(back.sets, plane.sets);
  const SetSystem file = read_set_system_file(std::string(THRCNF_DATA_DIR) + "/designs/steiner_2_4_13.json");
  EXPECT_EQ(file.sets, plane.sets);
  EXPECT_EQ(file.strength, 2U);
  EXPECT_EQ(partition_design(6, 3).sets.size(), 2U);
  EXPECT_THROW(parse_set_system_json("{\"n\": 3, \"blocks\": [[1, 4]]}"), InputError);
  EXPECT_THROW(parse_set_system_json("{\"n\": 3"), ParseError);
}
