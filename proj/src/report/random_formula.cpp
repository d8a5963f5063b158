#include "report/random_formula.hpp"

#include "formula/enumerate.hpp"
#include "formula/errors.hpp"

#include <algorithm>
#include <numeric>

namespace thrcnf {

namespace {

unsigned pick_width(unsigned n, unsigned k, SplitMix64& rng) {
  const unsigned cap = std::min(n, k);
  if (rng.below(4) != 0) return cap;
  return 1 + static_cast<unsigned>(rng.below(cap));
}

std::vector<Var> pick_vars(unsigned n, unsigned width, SplitMix64& rng) {
  std::vector<Var> vars(n);
  std::iota(vars.begin(), vars.end(), 1U);
  for (unsigned i = 0; i < width; ++i) std::swap(vars[i], vars[i + rng.below(n - i)]);
  vars.resize(width);
  return vars;
}

}  // namespace

Formula random_admissible_formula(unsigned n, unsigned t, unsigned k, SplitMix64& rng,
                                  const RandomFormulaOptions& opts) {
  if (n == 0 || n > 20 || k == 0 || t > n) throw InputError("random_admissible_formula needs 1 <= n <= 20, k >= 1, t <= n");
  std::vector<Clause> clauses;
  const unsigned initial = static_cast<unsigned>(rng.below(opts.max_initial_clauses + 1));
  for (unsigned i = 0; i < initial; ++i) {
    VarSet pos, neg;
    for (Var v : pick_vars(n, pick_width(n, k, rng), rng))
      ((opts.allow_negative && rng.below(2)) ? neg : pos).insert(v);
    clauses.emplace_back(std::move(pos), std::move(neg));
  }
  Formula f(n, k, clauses);
  for (;;) {
    const auto rep = is_admissible(f, t);
    if (rep.admissible) return f;
    // Literals false under the witness: x_v where it is 0, ~x_v where it is 1.
    const Assignment& w = *rep.witness;
    VarSet pos, neg;
    for (Var v : pick_vars(n, pick_width(n, k, rng), rng)) {
      if (w.get(v)) {
        if (opts.allow_negative) neg.insert(v);
      } else {
        pos.insert(v);
      }
    }
    if (pos.empty() && neg.empty()) {
      // Monotone mode and only ones were picked: fall back to a zero of the witness.
      for (Var v = 1; v <= n; ++v)
        if (!w.get(v)) {
          pos.insert(v);
          break;
        }
    }
    clauses.emplace_back(std::move(pos), std::move(neg));
    f = Formula(n, k, clauses);
  }
}

}  // namespace thrcnf
