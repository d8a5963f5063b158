#include "cover/rng.hpp"
#include "formula/errors.hpp"
#include "report/harness.hpp"
#include "report/random_formula.hpp"
#include "report/table.hpp"
#include "support.hpp"
#include "twocnf/conflict_graph.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace thrcnf;

TEST(ParseUintList, Forms) {
  EXPECT_EQ(parse_uint_list("2,3"), (std::vector<unsigned>{2, 3}));
  EXPECT_EQ(parse_uint_list("1..4"), (std::vector<unsigned>{1, 2, 3, 4}));
  EXPECT_EQ(parse_uint_list("5,1..2,5"), (std::vector<unsigned>{1, 2, 5}));
  EXPECT_EQ(parse_uint_list("4"), (std::vector<unsigned>{4}));
  EXPECT_THROW(parse_uint_list("a"), InputError);
  EXPECT_THROW(parse_uint_list("3..1"), InputError);
}

TEST(TableGrid, ThresholdRules) {
  TableGrid g;
  g.t_rule = "all";
  EXPECT_EQ(g.ts(3), (std::vector<unsigned>{0, 1, 2, 3}));
  g.t_rule = "n-3";
  EXPECT_EQ(g.ts(5), (std::vector<unsigned>{2}));
  EXPECT_TRUE(g.ts(2).empty());
  g.t_rule = "2";
  EXPECT_EQ(g.ts(5), (std::vector<unsigned>{2}));
  EXPECT_TRUE(g.ts(1).empty());
}

TEST(Table, WidthTwoMatchesClosedForm) {
  TableGrid g{{2}, parse_uint_list("1..10"), "all"};
  const auto rows = build_table(g, {});
  std::size_t expected_rows = 0;
  for (unsigned n = 1; n <= 10; ++n) expected_rows += n + 1;
  ASSERT_EQ(rows.size(), expected_rows);
  for (const auto& r : rows) {
    ASSERT_TRUE(r.exact) << r.n << " " << r.t;
    const BigInt closed = r.t == r.n ? BigInt(1) : song_yao_bound(r.n, r.n - r.t);
    EXPECT_EQ(*r.exact, closed) << r.n << " " << r.t;
    EXPECT_EQ(r.best_lower, closed);
    EXPECT_LE(r.best_lower, r.best_upper);
    EXPECT_LE(r.f_lower, r.f_upper);
    EXPECT_FALSE(r.s_gap);
  }
}

TEST(Table, WidthThreeNearTopThreshold) {
  TableGrid g{{3}, parse_uint_list("4..7"), "n-3"};
  const auto rows = build_table(g, {});
  ASSERT_EQ(rows.size(), 4U);
  for (const auto& r : rows) {
    ASSERT_TRUE(r.exact);
    // The brute-force Turan oracle is too slow past n = 6; T(7,4,3) = 12 is classical.
    const std::uint64_t turan = r.n <= 6 ? oracle::turan(r.n, 4, 3) : 12;
    EXPECT_EQ(*r.exact, BigInt(oracle::pascal(r.n, 3) - turan)) << r.n;
    EXPECT_LE(r.best_lower, *r.exact);
    EXPECT_LE(*r.exact, r.best_upper);
  }
}

TEST(Table, ConstructionsOnlyAndRefusals) {
  TableOptions opts;
  opts.constructions_only = true;
  const auto rows = build_table(TableGrid{{3}, {8}, "4"}, opts);
  ASSERT_EQ(rows.size(), 1U);
  EXPECT_FALSE(rows[0].exact);
  EXPECT_EQ(rows[0].exact_status, "skipped");
  EXPECT_EQ(rows[0].best_lower, 36);
  TableOptions tight;
  tight.limits.splus_max_n_k3 = 6;
  const auto refused = build_table(TableGrid{{3}, {8}, "4"}, tight);
  EXPECT_FALSE(refused[0].exact);
  EXPECT_EQ(refused[0].exact_status.rfind("refused", 0), 0U);
  EXPECT_TRUE(build_table(TableGrid{{}, {}, "all"}, {}).empty());
}

TEST(Table, CsvAndJson) {
  TableOptions opts;
  opts.constructions_only = true;
  const auto rows = build_table(TableGrid{{2}, {3}, "1"}, opts);
  const std::string csv = table_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "n,t,k,s_lower,s_lower_source,s_upper,s_upper_source,s_plus_exact,exact_status,s_gap,f_lower,f_upper");
  EXPECT_NE(csv.find("\n3,1,2,"), std::string::npos);
  EXPECT_NE(csv.find(",,skipped,"), std::string::npos);
  const Json j = table_json(rows);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_TRUE(j["rows"][0]["s_plus_exact"].is_null());
  EXPECT_EQ(table_csv({}).find('\n'), table_csv({}).size() - 1);
}

TEST(Table, CertificateFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "thrcnf_test_table";
  std::filesystem::remove_all(dir);
  TableOptions opts;
  opts.cert_dir = dir.string();
  const auto rows = build_table(TableGrid{{2}, {4}, "2"}, opts);
  ASSERT_TRUE(rows[0].cert_file);
  EXPECT_TRUE(std::filesystem::exists(dir / *rows[0].cert_file));
  std::filesystem::remove_all(dir);
}

TEST(Bounds, UpperBoundIsMinimum) {
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned n = 1; n <= 12; ++n)
      for (unsigned t = 1; t <= n; ++t) {
        const auto [v, src] = best_upper_bound(n, t, k);
        EXPECT_LE(v, binomial(n, t));
        EXPECT_LE(v, ipow(BigInt(k), t));
        EXPECT_GE(v, best_construction(n, t, k).first) << n << " " << t << " " << k;
        EXPECT_FALSE(src.empty());
      }
}

TEST(RandomFormula, AdmissibleAndWithinWidth) {
  SplitMix64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const unsigned n = 1 + static_cast<unsigned>(rng.below(10));
    const unsigned t = static_cast<unsigned>(rng.below(n + 1));
    const unsigned k = 1 + static_cast<unsigned>(rng.below(4));
    const Formula f = random_admissible_formula(n, t, k, rng);
    EXPECT_TRUE(oracle::admissible(f, t));
    EXPECT_LE(f.max_clause_width(), k);
  }
}

TEST(Harness, QuickRunPasses) {
  HarnessOptions opts;
  opts.quick = true;
  int seen = 0;
  const auto results = run_theorem_checks(opts, [&](const CriterionResult&) { ++seen; });
  EXPECT_EQ(results.size(), harness_criteria().size());
  EXPECT_EQ(seen, static_cast<int>(results.size()));
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.id << " " << r.title << ": " << r.detail;
}

TEST(Harness, MutationIsCaught) {
  for (int id : {1, 2, 3, 8}) {
    HarnessOptions opts;
    opts.quick = true;
    opts.only = {id};
    opts.mutate = id;
    const auto results = run_theorem_checks(opts);
    ASSERT_EQ(results.size(), 1U);
    EXPECT_FALSE(results[0].passed) << id;
  }
  HarnessOptions other;
  other.quick = true;
  other.only = {4};
  other.mutate = 2;
  EXPECT_TRUE(run_theorem_checks(other)[0].passed);
}
