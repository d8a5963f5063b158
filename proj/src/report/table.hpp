#pragma once

#include "formula/bigint.hpp"
#include "search/certificate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thrcnf {

/// Parameter grid: every (n, t, k) with k in ks, n in ns and t chosen by
/// t_rule ("all", "n-3", "2", "0..3" ...).
struct TableGrid {
  std::vector<unsigned> ks;
  std::vector<unsigned> ns;
  std::string t_rule = "all";
  std::vector<unsigned> ts(unsigned n) const;
};

/// "2,3" / "1..10" / "4" into a sorted list.
std::vector<unsigned> parse_uint_list(const std::string& text);

struct TableOptions {
  bool constructions_only = false;
  SearchLimits limits;
  unsigned threads = 1;
  /// Directory for per-cell certificate files; empty for none.
  std::string cert_dir;
};

struct TableRow {
  unsigned n = 0, t = 0, k = 0;
  BigInt best_lower;
  std::string lower_source;
  BigInt best_upper;
  std::string upper_source;
  /// Exact S+ when the search ran; `exact_status` says why it is missing otherwise.
  std::optional<BigInt> exact;
  std::string exact_status;
  bool s_gap = false;
  BigInt f_lower, f_upper;
  std::optional<std::string> cert_file;
};

/// Best monotone construction for (n,t,k): a product of blocks, each of size s
/// and threshold u >= s-k+1 carrying all (s-u+1)-subsets as clauses, so it
/// contributes C(s,u). This family contains the small-threshold, full-window,
/// adaptive and 2-CNF constructions; the reported source names the simplest
/// one reaching the optimum of the family.
std::pair<BigInt, std::string> best_construction(unsigned n, unsigned t, unsigned k);

/// min(C(n,t), k^t, floor(k C(n,t-1)/t)) with its source tag.
std::pair<BigInt, std::string> best_upper_bound(unsigned n, unsigned t, unsigned k);

std::vector<TableRow> build_table(const TableGrid& grid, const TableOptions& opts);

/// Columns: n,t,k,s_lower,s_lower_source,s_upper,s_upper_source,s_plus_exact,
/// exact_status,s_gap,f_lower,f_upper. A missing exact value is an empty field.
std::string table_csv(const std::vector<TableRow>& rows);
Json table_json(const std::vector<TableRow>& rows);

}  // namespace thrcnf
