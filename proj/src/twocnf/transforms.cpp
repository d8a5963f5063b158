#include "twocnf/transforms.hpp"

#include "formula/enumerate.hpp"
#include "formula/errors.hpp"
#include "twocnf/implication_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace thrcnf {

namespace {

void require_admissible(const Formula& f, unsigned t, const char* op) {
  if (f.max_clause_width() > 2) throw InputError(std::string(op) + " needs a 2-CNF");
  const auto rep = is_admissible(f, t);
  if (!rep.admissible)
    throw InputError(std::string(op) + ": input is not " + std::to_string(t) + "-admissible (witness " +
                     rep.witness->str() + ")");
}

std::size_t count_nonmonotone(const Formula& f) {
  return static_cast<std::size_t>(
      std::count_if(f.clauses().begin(), f.clauses().end(), [](const Clause& c) { return !c.is_monotone(); }));
}

Literal substitute(Literal l, Var x, Literal y) {
  if (l.var() != x) return l;
  return l.negated() ? ~y : y;
}

// Edge counts indexed by length under a fixed topological position map.
std::vector<std::size_t> length_histogram(const ImplicationGraph& g, const std::vector<std::size_t>& position) {
  std::vector<std::size_t> hist(g.num_nodes() + 1, 0);
  for (auto [a, b] : g.edges()) {
    if (position[b] <= position[a]) throw std::logic_error("monotonize2: fixed order is no longer topological");
    ++hist[position[b] - position[a]];
  }
  return hist;
}

}  // namespace

unsigned vars_on_cycles(const Formula& f) {
  const ImplicationGraph g(f);
  VarSet on_cycle;
  for (const auto& comp : g.sccs())
    if (comp.size() >= 2)
      for (LitNode v : comp) on_cycle.insert(literal_of(v).var());
  return static_cast<unsigned>(on_cycle.size());
}

Formula acyclify(const Formula& input, unsigned t, const TwoCnfOptions& opts, TransformLog* log) {
  if (opts.check_precondition) require_admissible(input, t, "acyclify");
  if (input.max_clause_width() > 2) throw InputError("acyclify needs a 2-CNF");
  Formula f = input;
  const unsigned n = f.num_vars();
  for (;;) {
    const ImplicationGraph g(f);
    const auto comps = g.sccs();
    const auto it = std::find_if(comps.begin(), comps.end(), [](const auto& c) { return c.size() >= 2; });
    if (it == comps.end()) return f;

    std::vector<LitNode> comp = *it;
    for (LitNode v : comp) {
      if (std::binary_search(comp.begin(), comp.end(), negate(v))) {
        // x and ~x are equivalent: no assignment satisfies f.
        std::vector<Clause> units;
        for (Var v2 = 1; v2 <= n; ++v2) units.emplace_back(VarSet{v2}, VarSet{});
        Formula out(n, std::max(2U, f.width()), std::move(units));
        if (log)
          log->push_back({"acyclify", "x" + std::to_string(literal_of(v).var()) +
                                          " and its negation share a component; formula is unsatisfiable, "
                                          "replaced by all positive units",
                          out.size(), 0});
        return out;
      }
    }
    if (std::none_of(comp.begin(), comp.end(), [](LitNode v) { return (v & 1U) == 0; })) {
      for (auto& v : comp) v = negate(v);
      std::sort(comp.begin(), comp.end());
    }
    const LitNode x_node = *std::find_if(comp.begin(), comp.end(), [](LitNode v) { return (v & 1U) == 0; });
    const LitNode y_node = *std::find_if(comp.begin(), comp.end(), [&](LitNode v) { return v != x_node; });
    const Var x = literal_of(x_node).var();
    const Literal y = literal_of(y_node);

    std::vector<Clause> clauses;
    for (const auto& c : f.clauses()) {
      std::vector<Literal> lits;
      for (Literal l : c.literals()) lits.push_back(substitute(l, x, y));
      if (Clause::is_tautology(lits)) continue;
      clauses.push_back(Clause::from_literals(lits));
    }
    clauses.push_back(Clause::from_literals({Literal::pos(x), ~y}));
    const unsigned before = opts.check_invariants ? vars_on_cycles(f) : 0;
    f = Formula(n, f.width(), std::move(clauses));
    if (opts.check_invariants && vars_on_cycles(f) >= before)
      throw std::logic_error("acyclify: number of variables on cycles did not decrease");
    if (log)
      log->push_back({"acyclify", "substitute x" + std::to_string(x) + " <- " + node_name(y_node) + ", add (x" +
                                      std::to_string(x) + " | " + node_name(negate(y_node)) + ")",
                      f.size(), count_nonmonotone(f)});
  }
}

Formula monotonize2(const Formula& input, unsigned t, const TwoCnfOptions& opts, TransformLog* log) {
  if (input.max_clause_width() > 2) throw InputError("monotonize2 needs a 2-CNF");
  const ImplicationGraph g0(input);
  const auto order = g0.topological_order();
  if (!order) throw InputError("monotonize2 needs an acyclic implication graph; run acyclify first");
  if (opts.check_precondition) require_admissible(input, t, "monotonize2");

  std::vector<std::size_t> position(g0.num_nodes());
  for (std::size_t i = 0; i < order->size(); ++i) position[(*order)[i]] = i;

  Formula f = input;
  const unsigned n = f.num_vars();
  for (;;) {
    // Shortest edge x -> Y among non-monotone clauses (~x | Y).
    struct Pick {
      std::size_t length, clause;
      Var x;
      Literal y;
    };
    std::optional<Pick> best;
    for (std::size_t ci = 0; ci < f.size(); ++ci) {
      const auto lits = f.clauses()[ci].literals();
      for (std::size_t i = 0; i < lits.size(); ++i) {
        if (!lits[i].negated()) continue;
        const Literal y = lits.size() == 1 ? lits[0] : lits[1 - i];
        const Var x = lits[i].var();
        const LitNode xn = node_of(Literal::pos(x)), yn = node_of(y);
        if (position[yn] <= position[xn]) throw std::logic_error("monotonize2: edge against the fixed order");
        const Pick cand{position[yn] - position[xn], ci, x, y};
        if (!best || std::tie(cand.length, cand.clause, cand.x) < std::tie(best->length, best->clause, best->x))
          best = cand;
      }
    }
    if (!best) return f;

    const ImplicationGraph g(f);
    const LitNode x_node = node_of(Literal::pos(best->x));
    const LitNode y_node = node_of(best->y);
    const auto anc = g.ancestors(x_node);
    const auto desc = g.descendants(y_node);

    std::vector<Clause> clauses;
    for (std::size_t ci = 0; ci < f.size(); ++ci)
      if (ci != best->clause) clauses.push_back(f.clauses()[ci]);
    std::size_t added = 0;
    auto add = [&](Literal a, Literal b) {
      const Literal lits[2] = {a, b};
      if (Clause::is_tautology(lits)) return;
      clauses.push_back(Clause::from_literals(lits));
      ++added;
    };
    for (LitNode z = 0; z < g.num_nodes(); ++z)
      if (anc[z]) add(~literal_of(z), best->y);
    for (LitNode w = 0; w < g.num_nodes(); ++w)
      if (desc[w]) add(Literal::neg(best->x), literal_of(w));

    Formula next(n, f.width(), std::move(clauses));
    if (opts.check_invariants) {
      const auto before = length_histogram(g, position);
      const auto after = length_histogram(ImplicationGraph(next), position);
      if (!std::lexicographical_compare(after.begin(), after.end(), before.begin(), before.end()))
        throw std::logic_error("monotonize2: edge-length profile did not decrease");
    }
    f = std::move(next);
    if (log) {
      std::string detail = "replace (" + node_name(negate(x_node)) + " | " + node_name(y_node) + ")";
      detail += " edge length " + std::to_string(best->length) + ", " + std::to_string(added) + " clauses added";
      log->push_back({"monotonize2", detail, f.size(), count_nonmonotone(f)});
    }
  }
}

}  // namespace thrcnf
