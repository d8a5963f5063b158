#pragma once

#include "formula/formula.hpp"
#include "formula/step_log.hpp"

namespace thrcnf {

struct TwoCnfOptions {
  /// Re-check the termination measures after every rewrite and throw
  /// std::logic_error if one fails to decrease.
  bool check_invariants = false;
  /// Verify the t-admissibility precondition by enumeration before starting.
  bool check_precondition = true;
};

/// Removes implication cycles by substituting a positive cycle literal x with
/// another literal Y of its component and adding (x | ~Y). The component is
/// the lexicographically smallest non-trivial SCC (or its dual, if it holds
/// only negative literals); x is its smallest positive variable and Y its
/// smallest other literal. A formula whose implication graph puts x and ~x
/// in one component is unsatisfiable and is replaced by the conjunction of
/// all positive units.
Formula acyclify(const Formula& f, unsigned t, const TwoCnfOptions& opts = {}, TransformLog* log = nullptr);

/// Rewrites an acyclic 2-CNF into a monotone one. Each step removes the
/// non-monotone clause (~x | Y) whose edge x -> Y is shortest under a
/// topological order fixed at the start, and adds (~Z | Y) for every
/// ancestor Z of x and (~x | W) for every descendant W of Y.
/// Throws InputError on cyclic input.
Formula monotonize2(const Formula& f, unsigned t, const TwoCnfOptions& opts = {}, TransformLog* log = nullptr);

/// Number of variables that lie on some implication cycle.
unsigned vars_on_cycles(const Formula& f);

}  // namespace thrcnf
