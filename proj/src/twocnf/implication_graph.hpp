#pragma once

#include "formula/formula.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thrcnf {

/// Literal node id: x_i -> 2(i-1), ~x_i -> 2(i-1)+1. Negation flips bit 0.
using LitNode = std::uint32_t;

inline LitNode node_of(Literal l) { return 2 * (l.var() - 1) + (l.negated() ? 1 : 0); }
inline Literal literal_of(LitNode v) {
  const Var x = v / 2 + 1;
  return (v & 1U) ? Literal::neg(x) : Literal::pos(x);
}
inline LitNode negate(LitNode v) { return v ^ 1U; }

std::string node_name(LitNode v);  // "x3" / "~x3"

/// Directed graph on the 2n literals of a 2-CNF: clause (X | Y) yields
/// ~X -> Y and ~Y -> X; a unit (X) yields ~X -> X.
class ImplicationGraph {
 public:
  /// Throws InputError if the formula has a clause wider than 2.
  explicit ImplicationGraph(const Formula& f);

  unsigned num_vars() const { return n_; }
  std::size_t num_nodes() const { return succ_.size(); }
  const std::vector<LitNode>& successors(LitNode v) const { return succ_[v]; }
  const std::vector<LitNode>& predecessors(LitNode v) const { return pred_[v]; }
  std::size_t num_edges() const;
  /// All edges, sorted.
  std::vector<std::pair<LitNode, LitNode>> edges() const;

  /// Nodes reachable from v by a path of length >= 1.
  std::vector<bool> descendants(LitNode v) const;
  /// Nodes from which v is reachable by a path of length >= 1.
  std::vector<bool> ancestors(LitNode v) const;

  /// Strongly connected components (Tarjan), each sorted ascending, the list
  /// sorted lexicographically.
  std::vector<std::vector<LitNode>> sccs() const;
  bool is_acyclic() const;
  /// Kahn's algorithm, always taking the smallest ready node; nullopt on a cycle.
  std::optional<std::vector<LitNode>> topological_order() const;
  bool closed_under_contraposition() const;

  /// One "x1 -> ~x2" line per edge.
  std::string edge_list() const;

 private:
  unsigned n_;
  std::vector<std::vector<LitNode>> succ_;
  std::vector<std::vector<LitNode>> pred_;
};

}  // namespace thrcnf
