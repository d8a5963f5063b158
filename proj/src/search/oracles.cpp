#include "search/oracles.hpp"

#include "formula/enumerate.hpp"
#include "formula/errors.hpp"

#include <algorithm>
#include <bit>

namespace thrcnf {

namespace {

std::uint64_t maj(std::uint64_t a, std::uint64_t b, std::uint64_t c) { return (a & b) | (a & c) | (b & c); }

// Majority closure of `closed` plus x, or nullopt once it reaches weight < t.
std::optional<std::vector<std::uint64_t>> close_with(const std::vector<std::uint64_t>& closed, std::uint64_t x,
                                                     unsigned t) {
  std::vector<std::uint64_t> set = closed;
  std::vector<std::uint64_t> work;
  auto add = [&](std::uint64_t v) {
    if (std::find(set.begin(), set.end(), v) != set.end()) return true;
    if (static_cast<unsigned>(std::popcount(v)) < t) return false;
    set.push_back(v);
    work.push_back(v);
    return true;
  };
  if (!add(x)) return std::nullopt;
  while (!work.empty()) {
    const std::uint64_t y = work.back();
    work.pop_back();
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = i; j < set.size(); ++j)
        if (!add(maj(y, set[i], set[j]))) return std::nullopt;
  }
  return set;
}

struct OracleSearch {
  unsigned n, t;
  std::vector<std::uint64_t> layer;
  std::vector<std::uint8_t> excluded;
  std::size_t best = 0;
  std::vector<std::uint64_t> best_closure;
  std::uint64_t nodes = 0;

  std::size_t on_layer(const std::vector<std::uint64_t>& set) const {
    return static_cast<std::size_t>(
        std::count_if(set.begin(), set.end(), [this](std::uint64_t v) { return std::popcount(v) == static_cast<int>(t); }));
  }

  bool contains(const std::vector<std::uint64_t>& set, std::uint64_t v) const {
    return std::find(set.begin(), set.end(), v) != set.end();
  }

  void dfs(std::size_t i, const std::vector<std::uint64_t>& closed) {
    ++nodes;
    const std::size_t have = on_layer(closed);
    if (have > best) {
      best = have;
      best_closure = closed;
    }
    std::size_t open = 0;
    for (std::size_t j = i; j < layer.size(); ++j) open += !contains(closed, layer[j]);
    if (have + open <= best) return;
    for (std::size_t j = i; j < layer.size(); ++j) {
      if (contains(closed, layer[j])) continue;
      // Branch "layer[j] is the next element added"; earlier skipped ones stay out.
      auto next = close_with(closed, layer[j], t);
      bool canonical = next.has_value();
      if (canonical)
        for (std::size_t p = i; p < j && canonical; ++p)
          if (!contains(closed, layer[p]) && contains(*next, layer[p])) canonical = false;
      if (canonical) dfs(j + 1, *next);
    }
  }
};

// Conjunction of every clause of width <= 2 satisfied by all members.
Formula two_cnf_of(unsigned n, const std::vector<std::uint64_t>& members) {
  std::vector<Clause> clauses;
  auto sat = [&](Literal l, std::uint64_t v) {
    const bool bit = (v >> (l.var() - 1)) & 1U;
    return l.negated() ? !bit : bit;
  };
  std::vector<Literal> lits;
  for (Var v = 1; v <= n; ++v) {
    lits.push_back(Literal::pos(v));
    lits.push_back(Literal::neg(v));
  }
  for (std::size_t a = 0; a < lits.size(); ++a) {
    if (std::all_of(members.begin(), members.end(), [&](std::uint64_t m) { return sat(lits[a], m); })) {
      clauses.push_back(Clause::from_literals({lits[a]}));
      continue;
    }
    for (std::size_t b = a + 1; b < lits.size(); ++b) {
      if (lits[b].var() == lits[a].var()) continue;
      if (std::all_of(members.begin(), members.end(), [&](std::uint64_t m) { return sat(lits[a], m) || sat(lits[b], m); }))
        clauses.push_back(Clause::from_literals({lits[a], lits[b]}));
    }
  }
  return Formula(n, 2, std::move(clauses));
}

}  // namespace

Certificate median_closed_oracle(unsigned n, unsigned t, const SearchLimits& limits) {
  if (t > n) throw InputError("median_closed_oracle needs t <= n");
  BigInt slice = 0;
  for (unsigned w = t; w <= n; ++w) slice += binomial(n, w);
  if (n > 30 || (slice > limits.oracle_max_slice && !limits.force))
    throw RefusedError("majority-closure oracle at (" + std::to_string(n) + "," + std::to_string(t) +
                       ") has a slice of " + slice.str() + " vectors; the limit is " +
                       std::to_string(limits.oracle_max_slice) + " (use force to run anyway)");
  Stopwatch clock;
  OracleSearch search{n, t, {}, {}, 0, {}, 0};
  for (std::uint64_t m : WeightRange(n, t)) search.layer.push_back(m);
  search.dfs(0, {});

  Certificate cert;
  cert.quantity = Quantity::S;
  cert.params = {{"n", n}, {"t", t}, {"k", 2}};
  cert.value = search.best;
  cert.nodes_explored = search.nodes;
  // An empty solution set needs a contradictory formula; only t > n gives that, which is rejected above.
  const Formula witness = two_cnf_of(n, search.best_closure);
  if (!is_admissible(witness, t).admissible || BigInt(count_weight_sat(witness, t)) != cert.value)
    throw VerificationError("majority-closure witness failed re-verification");
  cert.verified = true;
  cert.witness = witness;
  cert.elapsed_ms = clock.ms();
  return cert;
}

Certificate max_mis_over_graphs(unsigned n, unsigned s, const SearchLimits& limits) {
  if (s == 0 || s > n) throw InputError("max_mis_over_graphs needs 1 <= s <= n");
  if (n > 8 || (n > limits.mis_max_n && !limits.force))
    throw RefusedError("graph sweep on " + std::to_string(n) + " vertices covers 2^" + std::to_string(n * (n - 1) / 2) +
                       " graphs; the limit is n <= " + std::to_string(limits.mis_max_n) +
                       (n > 8 ? "" : " (use force to run anyway)"));
  Stopwatch clock;
  const std::uint64_t graphs = std::uint64_t{1} << (n * (n - 1) / 2);
  std::uint64_t best = 0, best_code = 0;
  for (std::uint64_t code = 0; code < graphs; ++code) {
    const std::uint64_t c = count_max_independent_sets(ConflictGraph::from_code(n, code), s);
    if (c > best) {
      best = c;
      best_code = code;
    }
  }
  const ConflictGraph g = ConflictGraph::from_code(n, best_code);

  // Re-count through the vertex-cover formula: I is a maximal independent set
  // iff its complement satisfies the edge clauses and no smaller cover does.
  std::vector<Clause> edges;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b)
      if (g.has_edge(a, b)) edges.emplace_back(VarSet{a + 1, b + 1}, VarSet{});
  const Formula cover_cnf(n, 2, std::move(edges));
  std::uint64_t recount = 0;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t indep : WeightRange(n, s)) {
    const std::uint64_t cover = all & ~indep;
    if (!evaluate(cover_cnf, Assignment::from_mask(n, cover))) continue;
    bool maximal = true;
    for (unsigned v = 0; v < n && maximal; ++v)
      if ((cover >> v) & 1U)
        maximal = !evaluate(cover_cnf, Assignment::from_mask(n, cover & ~(std::uint64_t{1} << v)));
    recount += maximal;
  }
  if (recount != best) throw VerificationError("maximal independent set witness failed re-verification");

  Certificate cert;
  cert.quantity = Quantity::MaxMis;
  cert.params = {{"n", n}, {"s", s}};
  cert.value = best;
  cert.nodes_explored = graphs;
  cert.verified = true;
  cert.witness = g;
  cert.elapsed_ms = clock.ms();
  return cert;
}

}  // namespace thrcnf
