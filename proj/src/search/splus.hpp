#pragma once

#include "search/certificate.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace thrcnf {

/// Exact S+(n,t,k): the largest weight-t solution count of a monotone
/// t-admissible k-CNF on n variables, with an optimal witness formula.
///
/// With m = n - t, a monotone formula is t-admissible iff every (m+1)-set of
/// variables contains some clause, and its weight-t solutions are the m-sets
/// containing no clause. A clause of width below k can be replaced by all of
/// its k-supersets without uncovering an (m+1)-set (when m+1 >= k) and
/// without hitting a new m-set, so the branch and bound ranges over families
/// of k-sets only and minimises the number of m-sets they hit.
Certificate exact_monotone_S(unsigned n, unsigned t, unsigned k, const SearchLimits& limits = {});

struct UniquenessReport {
  unsigned n = 0, t = 0, k = 0;
  std::uint64_t optimum = 0;
  /// Optimal families of width-k clauses found by the exhaustive re-search.
  std::size_t optima = 0;
  std::size_t with_disjoint_clauses = 0;
  bool all_have_disjoint_clauses = false;
  std::optional<Formula> counterexample;
  std::uint64_t nodes_explored = 0;
  double elapsed_ms = 0;
};

/// Enumerates every optimal width-k witness of S+(n,t,k) and checks that each
/// contains t pairwise disjoint clauses. Requires k t <= n.
UniquenessReport uniqueness_probe(unsigned n, unsigned t, unsigned k, const SearchLimits& limits = {});

/// True when S(n,t,k) = S+(n,t,k) is known at these parameters.
bool s_equals_s_plus_known(unsigned n, unsigned t, unsigned k);

}  // namespace thrcnf
