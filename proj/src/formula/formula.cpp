#include "formula/formula.hpp"

#include "formula/errors.hpp"

#include <algorithm>
#include <cstdio>

namespace thrcnf {

Clause::Clause(VarSet pos, VarSet neg) : pos_(std::move(pos)), neg_(std::move(neg)) {
  if (pos_.empty() && neg_.empty()) throw InputError("empty clause");
  if (pos_.intersects(neg_)) throw InputError("tautological clause");
}

bool Clause::is_tautology(std::span<const Literal> lits) {
  for (std::size_t i = 0; i < lits.size(); ++i)
    for (std::size_t j = i + 1; j < lits.size(); ++j)
      if (lits[i].code == -lits[j].code) return true;
  return false;
}

Clause Clause::from_literals(std::span<const Literal> lits) {
  VarSet pos, neg;
  for (Literal l : lits) {
    if (l.code == 0) throw InputError("literal 0 is not a variable");
    (l.negated() ? neg : pos).insert(l.var());
  }
  return Clause(std::move(pos), std::move(neg));
}

std::vector<Literal> Clause::literals() const {
  std::vector<Literal> out;
  for (Var v : pos_.elements()) out.push_back(Literal::pos(v));
  for (Var v : neg_.elements()) out.push_back(Literal::neg(v));
  std::sort(out.begin(), out.end(), [](Literal a, Literal b) { return a.var() < b.var(); });
  return out;
}

Formula::Formula(unsigned n, unsigned width, std::vector<Clause> clauses)
    : n_(n), width_(width), clauses_(std::move(clauses)) {
  if (n_ == 0) throw InputError("formula needs at least one variable");
  if (width_ == 0) throw InputError("declared width must be positive");
  for (const auto& c : clauses_) {
    if (c.max_var() > n_)
      throw InputError("clause mentions x" + std::to_string(c.max_var()) + " but n = " + std::to_string(n_));
    if (c.width() > width_)
      throw InputError("clause of width " + std::to_string(c.width()) + " exceeds declared width " +
                       std::to_string(width_));
  }
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

bool Formula::is_monotone() const {
  return std::all_of(clauses_.begin(), clauses_.end(), [](const Clause& c) { return c.is_monotone(); });
}

std::vector<unsigned> Formula::width_profile() const {
  std::vector<unsigned> w;
  w.reserve(clauses_.size());
  for (const auto& c : clauses_) w.push_back(static_cast<unsigned>(c.width()));
  std::sort(w.begin(), w.end());
  return w;
}

unsigned Formula::max_clause_width() const {
  unsigned w = 0;
  for (const auto& c : clauses_) w = std::max(w, static_cast<unsigned>(c.width()));
  return w;
}

Formula Formula::without(std::size_t index) const {
  std::vector<Clause> rest;
  rest.reserve(clauses_.size() - 1);
  for (std::size_t i = 0; i < clauses_.size(); ++i)
    if (i != index) rest.push_back(clauses_[i]);
  return Formula(n_, width_, std::move(rest));
}

Assignment Assignment::from_ones(unsigned n, VarSet ones) {
  if (ones.max_var() > n) throw InputError("assignment sets a variable beyond n");
  Assignment a(n);
  a.weight_ = static_cast<unsigned>(ones.size());
  a.ones_ = std::move(ones);
  return a;
}

Assignment Assignment::from_mask(unsigned n, std::uint64_t mask) {
  return from_ones(n, VarSet::from_mask(mask));
}

Assignment Assignment::parse(const std::string& bits) {
  VarSet ones;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      ones.insert(static_cast<Var>(i + 1));
    else if (bits[i] != '0')
      throw InputError("assignment string must contain only 0 and 1");
  }
  return from_ones(static_cast<unsigned>(bits.size()), std::move(ones));
}

std::string Assignment::str() const {
  std::string s(n_, '0');
  for (Var v : ones_.elements()) s[v - 1] = '1';
  return s;
}

bool is_monotone(const Formula& f) { return f.is_monotone(); }
std::vector<unsigned> width_profile(const Formula& f) { return f.width_profile(); }

bool evaluate(const Formula& f, const Assignment& a) {
  if (a.size() != f.num_vars())
    throw InputError("assignment length " + std::to_string(a.size()) + " does not match n = " +
                     std::to_string(f.num_vars()));
  const VarSet& ones = a.ones();
  for (const auto& c : f.clauses()) {
    if (c.pos().intersects(ones)) continue;
    if (!c.neg().subset_of(ones)) continue;
    return false;
  }
  return true;
}

CompactCnf::CompactCnf(const Formula& f) : n_(f.num_vars()) {
  if (n_ > 63) throw InputError("exhaustive kernels support at most 63 variables, got " + std::to_string(n_));
  clauses_.reserve(f.size());
  for (const auto& c : f.clauses()) clauses_.push_back({*c.pos().mask(), *c.neg().mask()});
}

std::string canonical_hash(const Formula& f) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::int64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= static_cast<std::uint8_t>(static_cast<std::uint64_t>(v) >> (8 * i));
      h *= 0x100000001b3ULL;
    }
  };
  mix(f.num_vars());
  for (const auto& c : f.clauses()) {
    for (Literal l : c.literals()) mix(l.code);
    mix(0);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string to_string(const Formula& f) {
  if (f.clauses().empty()) return "TRUE";
  std::string s;
  for (const auto& c : f.clauses()) {
    if (!s.empty()) s += " & ";
    s += '(';
    bool first = true;
    for (Literal l : c.literals()) {
      if (!first) s += " | ";
      first = false;
      if (l.negated()) s += '~';
      s += 'x' + std::to_string(l.var());
    }
    s += ')';
  }
  return s;
}

}  // namespace thrcnf
