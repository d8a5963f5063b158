#pragma once

#include "cover/rng.hpp"
#include "formula/formula.hpp"

namespace thrcnf {

struct RandomFormulaOptions {
  /// Random clauses drawn before admissibility is repaired (upper bound).
  unsigned max_initial_clauses = 12;
  bool allow_negative = true;
};

/// A random t-admissible formula of width <= k on n <= 20 variables: some
/// random clauses, then while a weight < t solution exists, a random clause
/// falsified by it is added.
Formula random_admissible_formula(unsigned n, unsigned t, unsigned k, SplitMix64& rng,
                                  const RandomFormulaOptions& opts = {});

}  // namespace thrcnf
