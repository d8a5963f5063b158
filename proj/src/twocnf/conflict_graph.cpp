#include "twocnf/conflict_graph.hpp"

#include "formula/errors.hpp"

#include <bit>

namespace thrcnf {

ConflictGraph::ConflictGraph(unsigned n_) : n(n_), adj(n_, 0) {
  if (n_ > 64) throw InputError("conflict graphs support at most 64 vertices");
}

void ConflictGraph::add_edge(unsigned a, unsigned b) {
  if (a == b) throw InputError("conflict graph has no self-loops");
  adj[a] |= std::uint64_t{1} << b;
  adj[b] |= std::uint64_t{1} << a;
}

std::size_t ConflictGraph::num_edges() const {
  std::size_t e = 0;
  for (auto a : adj) e += static_cast<std::size_t>(std::popcount(a));
  return e / 2;
}

std::string ConflictGraph::edge_list() const {
  std::string out;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b)
      if (has_edge(a, b)) out += std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
  for (unsigned v = 0; v < n; ++v)
    if ((forced >> v) & 1U) out += "forced " + std::to_string(v + 1) + "\n";
  return out;
}

ConflictGraph ConflictGraph::from_code(unsigned n, std::uint64_t code) {
  ConflictGraph g(n);
  unsigned bit = 0;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b, ++bit)
      if ((code >> bit) & 1U) g.add_edge(a, b);
  return g;
}

ConflictGraph conflict_graph(const Formula& f) {
  if (!f.is_monotone()) throw InputError("conflict graph needs a monotone formula");
  ConflictGraph g(f.num_vars());
  for (const auto& c : f.clauses()) {
    const auto vars = c.pos().elements();
    if (vars.size() > 2) throw InputError("conflict graph needs a 2-CNF");
    if (vars.size() == 1)
      g.forced |= std::uint64_t{1} << (vars[0] - 1);
    else
      g.add_edge(vars[0] - 1, vars[1] - 1);
  }
  return g;
}

namespace {

struct MisCounter {
  const ConflictGraph& g;
  std::uint64_t allowed;
  unsigned target;

  std::uint64_t non_neighbours(unsigned v) const { return ~g.adj[v] & ~(std::uint64_t{1} << v) & allowed; }

  std::uint64_t run(unsigned size, std::uint64_t cand, std::uint64_t excluded) const {
    if (size == target) return (cand | excluded) == 0 ? 1 : 0;
    if (size + static_cast<unsigned>(std::popcount(cand)) < target) return 0;
    if ((cand | excluded) == 0) return 0;
    // Pivot maximising the candidates it rules out as immediate branches.
    const std::uint64_t pool = cand | excluded;
    unsigned pivot = static_cast<unsigned>(std::countr_zero(pool));
    int best = -1;
    for (std::uint64_t p = pool; p; p &= p - 1) {
      const unsigned u = static_cast<unsigned>(std::countr_zero(p));
      const int covered = std::popcount(cand & non_neighbours(u));
      if (covered > best) {
        best = covered;
        pivot = u;
      }
    }
    std::uint64_t total = 0;
    std::uint64_t branch = cand & ~non_neighbours(pivot);
    while (branch) {
      const unsigned v = static_cast<unsigned>(std::countr_zero(branch));
      const std::uint64_t bit = std::uint64_t{1} << v;
      branch &= branch - 1;
      total += run(size + 1, cand & non_neighbours(v), excluded & non_neighbours(v));
      cand &= ~bit;
      excluded |= bit;
    }
    return total;
  }
};

}  // namespace

std::uint64_t count_max_independent_sets(const ConflictGraph& g, unsigned s) {
  const std::uint64_t all = g.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1;
  const std::uint64_t allowed = all & ~g.forced;
  MisCounter counter{g, allowed, s};
  return counter.run(0, allowed, 0);
}

BigInt song_yao_bound(unsigned n, unsigned s) {
  if (s == 0) return 1;
  if (s > n) throw InputError("song_yao_bound needs s <= n");
  const unsigned q = n / s;
  const unsigned r = n - s * q;
  return ipow(q, s - r) * ipow(q + 1, r);
}

}  // namespace thrcnf
