#pragma once

#include "formula/formula.hpp"
#include "formula/step_log.hpp"

namespace thrcnf {

struct NormalizeOptions {
  /// Re-count weight-t solutions after every step and throw std::logic_error
  /// when a step loses solutions (or widen_clause fails to gain one).
  bool check_invariants = false;
  /// Verify t-admissibility of the input before starting.
  bool check_precondition = true;
};

/// Rewrites an (n-k)-admissible k-CNF into a monotone one. Each step takes
/// the first non-monotone clause in canonical order and replaces it by P | S
/// for every (k-|P|)-subset S of the variables outside the clause, P being
/// its positive part. Only valid at threshold n-k.
Formula monotonize_high_threshold(const Formula& f, unsigned k, const NormalizeOptions& opts = {},
                                  TransformLog* log = nullptr);

/// One pass in reverse canonical order dropping every clause whose removal
/// keeps the formula t-admissible. The result is irredundant.
Formula remove_redundant(const Formula& f, unsigned t, TransformLog* log = nullptr);

/// Widens the first clause shorter than k. With alpha the first weight-(t-1)
/// assignment that satisfies every other clause, y_1..y_{t-1} its ones and
/// y_t the smallest variable outside the clause and the y's, the clause C is
/// replaced by (C | y_j) for j = 1..t. Returns the input when every clause has
/// width k. Throws InputError if n < k + t, the formula is not monotone, or
/// no witness exists (the clause was redundant).
Formula widen_clause(const Formula& f, unsigned t, unsigned k, TransformLog* log = nullptr);

/// Fixed point of monotonize_high_threshold, remove_redundant and
/// widen_clause: a monotone, irredundant formula of uniform width k.
/// Non-monotone input is only accepted at t = n - k.
Formula normalize(const Formula& f, unsigned t, unsigned k, const NormalizeOptions& opts = {},
                  TransformLog* log = nullptr);

/// True if no clause can be dropped without breaking t-admissibility.
bool is_irredundant(const Formula& f, unsigned t);

}  // namespace thrcnf
