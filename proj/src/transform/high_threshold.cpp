#include "transform/high_threshold.hpp"

#include "formula/enumerate.hpp"
#include "formula/errors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace thrcnf {

namespace {

std::string clause_str(const Clause& c) {
  std::string s = "(";
  bool first = true;
  for (Literal l : c.literals()) {
    if (!first) s += " | ";
    first = false;
    s += (l.negated() ? "~x" : "x") + std::to_string(l.var());
  }
  return s + ")";
}

std::size_t count_nonmonotone(const Formula& f) {
  return static_cast<std::size_t>(
      std::count_if(f.clauses().begin(), f.clauses().end(), [](const Clause& c) { return !c.is_monotone(); }));
}

void for_each_subset(const std::vector<Var>& pool, std::size_t size, const std::function<void(const VarSet&)>& fn) {
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  if (size > pool.size()) return;
  for (;;) {
    VarSet s;
    for (auto i : idx) s.insert(pool[i]);
    fn(s);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == pool.size() - size + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Admissibility of f with clause `skip` removed, by direct enumeration.
bool admissible_without(const Formula& f, std::size_t skip, unsigned t) {
  std::vector<Clause> rest;
  rest.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    if (i != skip) rest.push_back(f.clauses()[i]);
  const Formula g(f.num_vars(), f.width(), std::move(rest));
  return is_admissible(g, t).admissible;
}

}  // namespace

bool is_irredundant(const Formula& f, unsigned t) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (admissible_without(f, i, t)) return false;
  return true;
}

Formula monotonize_high_threshold(const Formula& input, unsigned k, const NormalizeOptions& opts, TransformLog* log) {
  const unsigned n = input.num_vars();
  if (k == 0 || k > n) throw InputError("monotonize_high_threshold needs 1 <= k <= n");
  if (input.max_clause_width() > k) throw InputError("monotonize_high_threshold: clause wider than k");
  const unsigned t = n - k;
  if (opts.check_precondition) {
    const auto rep = is_admissible(input, t);
    if (!rep.admissible)
      throw InputError("monotonize_high_threshold: input is not " + std::to_string(t) + "-admissible (witness " +
                       rep.witness->str() + ")");
  }
  Formula f = input;
  for (;;) {
    const auto it = std::find_if(f.clauses().begin(), f.clauses().end(), [](const Clause& c) { return !c.is_monotone(); });
    if (it == f.clauses().end()) return f;
    const Clause c = *it;
    const std::size_t p = c.pos().size();
    const VarSet used = c.vars();
    std::vector<Var> outside;
    for (Var v = 1; v <= n; ++v)
      if (!used.contains(v)) outside.push_back(v);

    const std::size_t before_nonmono = count_nonmonotone(f);
    const std::uint64_t before_count = opts.check_invariants ? count_weight_sat(f, t) : 0;
    std::vector<Clause> clauses;
    for (const auto& d : f.clauses())
      if (!(d == c)) clauses.push_back(d);
    std::size_t added = 0;
    for_each_subset(outside, k - p, [&](const VarSet& s) {
      clauses.emplace_back(c.pos() | s, VarSet{});
      ++added;
    });
    f = Formula(n, std::max(f.width(), k), std::move(clauses));
    if (opts.check_invariants) {
      if (count_nonmonotone(f) >= before_nonmono)
        throw std::logic_error("monotonize_high_threshold: non-monotone clause count did not decrease");
      if (count_weight_sat(f, t) < before_count)
        throw std::logic_error("monotonize_high_threshold: weight-t count decreased");
    }
    if (log)
      log->push_back({"monotonize", "replace " + clause_str(c) + " by " + std::to_string(added) + " monotone clauses",
                      f.size(), count_nonmonotone(f)});
  }
}

Formula remove_redundant(const Formula& input, unsigned t, TransformLog* log) {
  Formula f = input;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (!admissible_without(f, i, t)) continue;
    const Clause dropped = f.clauses()[i];
    f = f.without(i);
    if (log) log->push_back({"remove-redundant", "drop " + clause_str(dropped), f.size(), count_nonmonotone(f)});
  }
  return f;
}

Formula widen_clause(const Formula& f, unsigned t, unsigned k, TransformLog* log) {
  const unsigned n = f.num_vars();
  if (n < k + t) throw InputError("widen_clause needs n >= k + t");
  if (!f.is_monotone()) throw InputError("widen_clause needs a monotone formula");
  const auto it = std::find_if(f.clauses().begin(), f.clauses().end(), [k](const Clause& c) { return c.width() < k; });
  if (it == f.clauses().end()) return f;
  const std::size_t ci = static_cast<std::size_t>(it - f.clauses().begin());
  const Clause c = *it;
  if (t == 0) throw InputError("widen_clause: clause " + clause_str(c) + " is redundant at t = 0");

  const Formula rest = f.without(ci);
  const CompactCnf rest_cnf(rest);
  const std::uint64_t cmask = *c.pos().mask();
  std::optional<std::uint64_t> alpha;
  for (std::uint64_t m : WeightRange(n, t - 1)) {
    if ((m & cmask) == 0 && rest_cnf.satisfied_by(m)) {
      alpha = m;
      break;
    }
  }
  if (!alpha) throw InputError("widen_clause: clause " + clause_str(c) + " is redundant (no witness assignment)");

  VarSet ys = VarSet::from_mask(*alpha);
  const VarSet blocked = ys | c.pos();
  Var fresh = 1;
  while (blocked.contains(fresh)) ++fresh;
  ys.insert(fresh);

  std::vector<Clause> clauses = rest.clauses();
  for (Var y : ys.elements()) {
    VarSet wider = c.pos();
    wider.insert(y);
    clauses.emplace_back(std::move(wider), VarSet{});
  }
  Formula g(n, std::max(f.width(), k), std::move(clauses));
  if (log)
    log->push_back({"widen", "widen " + clause_str(c) + " with witness " + Assignment::from_mask(n, *alpha).str(),
                    g.size(), 0});
  return g;
}

Formula normalize(const Formula& input, unsigned t, unsigned k, const NormalizeOptions& opts, TransformLog* log) {
  const unsigned n = input.num_vars();
  if (input.max_clause_width() > k) throw InputError("normalize: clause wider than k");
  if (opts.check_precondition) {
    const auto rep = is_admissible(input, t);
    if (!rep.admissible)
      throw InputError("normalize: input is not " + std::to_string(t) + "-admissible (witness " +
                       rep.witness->str() + ")");
  }
  Formula f = input;
  if (!f.is_monotone()) {
    if (k > n || t != n - k) throw InputError("normalize: non-monotone input is only supported at t = n - k");
    NormalizeOptions inner = opts;
    inner.check_precondition = false;
    f = monotonize_high_threshold(f, k, inner, log);
  }
  for (;;) {
    const std::uint64_t before = opts.check_invariants ? count_weight_sat(f, t) : 0;
    f = remove_redundant(f, t, log);
    if (opts.check_invariants && count_weight_sat(f, t) < before)
      throw std::logic_error("normalize: remove_redundant lost solutions");
    const std::uint64_t mid = opts.check_invariants ? count_weight_sat(f, t) : 0;
    Formula g = widen_clause(f, t, k, log);
    if (g == f) return f;
    if (opts.check_invariants && count_weight_sat(g, t) <= mid)
      throw std::logic_error("normalize: widen_clause did not gain a solution");
    f = std::move(g);
  }
}

}  // namespace thrcnf
