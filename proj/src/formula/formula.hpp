#pragma once

#include "formula/varset.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace thrcnf {

/// DIMACS-style literal: +i is x_i, -i is its negation.
struct Literal {
  std::int32_t code = 0;

  static Literal pos(Var v) { return Literal{static_cast<std::int32_t>(v)}; }
  static Literal neg(Var v) { return Literal{-static_cast<std::int32_t>(v)}; }
  Var var() const { return static_cast<Var>(code < 0 ? -code : code); }
  bool negated() const { return code < 0; }
  Literal operator~() const { return Literal{-code}; }
  bool operator==(const Literal&) const = default;
};

class Clause {
 public:
  /// Throws InputError for an empty or tautological clause.
  Clause(VarSet pos, VarSet neg);

  /// Duplicate literals are merged. Throws InputError on a tautology; callers
  /// that may produce one check is_tautology first and drop it themselves.
  static Clause from_literals(std::span<const Literal> lits);
  static Clause from_literals(std::initializer_list<Literal> lits) {
    return from_literals(std::span<const Literal>(lits.begin(), lits.size()));
  }
  static bool is_tautology(std::span<const Literal> lits);

  const VarSet& pos() const { return pos_; }
  const VarSet& neg() const { return neg_; }
  std::size_t width() const { return pos_.size() + neg_.size(); }
  bool is_monotone() const { return neg_.empty(); }
  Var max_var() const { return std::max(pos_.max_var(), neg_.max_var()); }
  VarSet vars() const { return pos_ | neg_; }
  /// Literals in ascending variable order.
  std::vector<Literal> literals() const;

  bool operator==(const Clause&) const = default;
  std::strong_ordering operator<=>(const Clause& o) const {
    if (auto c = pos_ <=> o.pos_; c != 0) return c;
    return neg_ <=> o.neg_;
  }

 private:
  VarSet pos_;
  VarSet neg_;
};

/// Width-bounded CNF over variables x_1..x_n, kept in canonical form:
/// clauses sorted ascending and deduplicated.
class Formula {
 public:
  /// Throws InputError if a clause mentions a variable outside [1, n] or is
  /// wider than `width`.
  Formula(unsigned n, unsigned width, std::vector<Clause> clauses);
  static Formula empty(unsigned n, unsigned width) { return Formula(n, width, {}); }

  unsigned num_vars() const { return n_; }
  unsigned width() const { return width_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  bool is_monotone() const;
  /// Clause widths, ascending.
  std::vector<unsigned> width_profile() const;
  unsigned max_clause_width() const;

  /// Copy with one clause removed (by index into clauses()).
  Formula without(std::size_t index) const;

  bool operator==(const Formula&) const = default;

 private:
  unsigned n_;
  unsigned width_;
  std::vector<Clause> clauses_;
};

/// Length-n bitvector with cached Hamming weight.
class Assignment {
 public:
  explicit Assignment(unsigned n) : n_(n) {}
  static Assignment from_ones(unsigned n, VarSet ones);
  static Assignment from_mask(unsigned n, std::uint64_t mask);
  /// Parses a 0/1 string, first character is x1.
  static Assignment parse(const std::string& bits);

  unsigned size() const { return n_; }
  unsigned weight() const { return weight_; }
  bool get(Var v) const { return ones_.contains(v); }
  const VarSet& ones() const { return ones_; }
  std::optional<std::uint64_t> mask() const { return ones_.mask(); }
  /// 0/1 string, first character is x1.
  std::string str() const;

  bool operator==(const Assignment&) const = default;

 private:
  unsigned n_;
  VarSet ones_;
  unsigned weight_ = 0;
};

bool is_monotone(const Formula& f);
std::vector<unsigned> width_profile(const Formula& f);

/// Throws InputError on length mismatch.
bool evaluate(const Formula& f, const Assignment& a);

/// Flattened single-word clause list used by the enumeration kernels.
class CompactCnf {
 public:
  /// Throws InputError when the formula has more than 63 variables.
  explicit CompactCnf(const Formula& f);

  unsigned num_vars() const { return n_; }
  bool satisfied_by(std::uint64_t ones) const {
    for (const auto& c : clauses_)
      if (!(c.pos & ones) && !(c.neg & ~ones)) return false;
    return true;
  }

 private:
  struct MaskClause {
    std::uint64_t pos;
    std::uint64_t neg;
  };
  unsigned n_;
  std::vector<MaskClause> clauses_;
};

/// Hex FNV-1a digest of the canonical clause list (independent of input order).
std::string canonical_hash(const Formula& f);

/// Renders clauses like "(x1 | ~x2) & (x3)"; empty formula renders as "TRUE".
std::string to_string(const Formula& f);

}  // namespace thrcnf
