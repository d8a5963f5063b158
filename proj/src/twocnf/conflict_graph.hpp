#pragma once

#include "formula/bigint.hpp"
#include "formula/formula.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace thrcnf {

/// Simple undirected graph on vertices 0..n-1 (vertex i is variable x_{i+1}),
/// plus a set of forced vertices coming from unit clauses. Forced vertices
/// belong to every vertex cover and so never appear in an independent set.
struct ConflictGraph {
  unsigned n = 0;
  std::vector<std::uint64_t> adj;
  std::uint64_t forced = 0;

  explicit ConflictGraph(unsigned n_ = 0);
  void add_edge(unsigned a, unsigned b);
  bool has_edge(unsigned a, unsigned b) const { return (adj[a] >> b) & 1U; }
  std::size_t num_edges() const;
  /// "a b" per line, 1-based, followed by "forced v" lines.
  std::string edge_list() const;

  /// Graph on n <= 8 vertices from a bit code over the C(n,2) pairs in
  /// (0,1), (0,2), ..., (n-2,n-1) order.
  static ConflictGraph from_code(unsigned n, std::uint64_t code);
};

/// One edge per 2-clause. Throws InputError for non-monotone input, clauses
/// wider than 2, or n > 64.
ConflictGraph conflict_graph(const Formula& f);

/// Number of independent sets of size s that avoid forced vertices and are
/// maximal among such sets (Bron-Kerbosch with pivoting and size pruning).
std::uint64_t count_max_independent_sets(const ConflictGraph& g, unsigned s);

/// q^{s-r} (q+1)^r with q = floor(n/s), r = n - s q; 1 when s = 0.
BigInt song_yao_bound(unsigned n, unsigned s);

}  // namespace thrcnf
