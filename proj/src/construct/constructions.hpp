#pragma once

#include "formula/bigint.hpp"
#include "formula/dimacs.hpp"
#include "formula/formula.hpp"
#include "formula/set_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thrcnf {

enum class Method { SmallThreshold, FullWindow, Adaptive, Product, TwoCnfOptimal, FromCover, FromSteiner };

std::string to_string(Method m);
/// Accepts the tags printed by to_string ("small-threshold", "adaptive", ...).
Method parse_method(const std::string& tag);

/// A formula together with the admissibility threshold and weight-t solution
/// count its construction guarantees.
struct ConstructionResult {
  Formula formula;
  unsigned t = 0;
  BigInt claimed_count;
  Method method = Method::Product;

  /// Metadata written into DIMACS comments.
  Metadata metadata() const;
};

/// Block size b = (k-1)/(1-alpha) of the adaptive construction. Validation
/// fails unless b is an integer with b >= k (so every block carries clauses).
struct AdaptiveParams {
  Ratio alpha;
  unsigned k = 0;
  unsigned b = 0;

  static AdaptiveParams make(Ratio alpha, unsigned k);
  unsigned ones_per_block() const { return b - k + 1; }
};

/// t disjoint monotone width-k blocks plus negative units on the leftovers.
ConstructionResult small_threshold_formula(unsigned n, unsigned t, unsigned k);

/// All width-k monotone clauses on b variables; threshold b-k+1.
ConstructionResult full_window_formula(unsigned b, unsigned k);

/// n/b disjoint full-window blocks of size b = (k-1)/(1-alpha).
ConstructionResult adaptive_block_formula(unsigned n, Ratio alpha, unsigned k);

/// Conjunction over disjoint, consecutively re-indexed variable ranges.
ConstructionResult product_combine(const std::vector<ConstructionResult>& parts);

/// Disjoint blocks (s, u), each carrying every monotone clause of width
/// s-u+1 <= k on its s variables (count C(s,u), threshold u). A block with
/// u = 0 has no clauses and contributes a factor 1.
/// The plan maximises the product of C(s,u) subject to sum s = n and
/// sum u = t. Blocks are listed in variable order.
struct BlockPlan {
  std::vector<std::pair<unsigned, unsigned>> blocks;
  BigInt value;
};
BlockPlan block_product_plan(unsigned n, unsigned t, unsigned k);
ConstructionResult block_product_formula(unsigned n, unsigned t, unsigned k);

/// Cliques on n-t blocks of sizes q and q+1, where n = (n-t)q + r.
ConstructionResult two_cnf_optimal(unsigned n, unsigned t);

/// One clause [n] \ S per set of an (n-k)-uniform system covering every
/// (n-k-1)-subset; threshold n-k.
ConstructionResult from_cover_design(const SetSystem& cover, unsigned n, unsigned k);

/// One clause [n] \ S per block of a Steiner (n, n-k, t-1) design. The
/// strength r = t-1 is taken from the system when recorded, else inferred
/// as the smallest r >= 1 for which the exact-cover property holds.
ConstructionResult from_steiner(const SetSystem& design, unsigned n);

struct ConstructionCheck {
  bool admissible = false;
  std::uint64_t count = 0;
  bool count_matches = false;
  bool ok() const { return admissible && count_matches; }
};

/// Re-checks admissibility and the claimed count through the exhaustive kernels.
ConstructionCheck verify_construction(const ConstructionResult& r, unsigned threads = 1);

}  // namespace thrcnf
