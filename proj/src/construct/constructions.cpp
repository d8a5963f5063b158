#include "construct/constructions.hpp"

#include "formula/enumerate.hpp"
#include "formula/errors.hpp"

#include <algorithm>
#include <array>

namespace thrcnf {

namespace {

constexpr std::array<std::pair<Method, const char*>, 7> kMethodNames{{
    {Method::SmallThreshold, "small-threshold"},
    {Method::FullWindow, "full-window"},
    {Method::Adaptive, "adaptive"},
    {Method::Product, "product"},
    {Method::TwoCnfOptimal, "two-cnf-optimal"},
    {Method::FromCover, "from-cover"},
    {Method::FromSteiner, "from-steiner"},
}};

VarSet range_set(unsigned first, unsigned count) {
  VarSet s;
  for (unsigned i = 0; i < count; ++i) s.insert(first + i);
  return s;
}

VarSet complement(const VarSet& s, unsigned n) { return range_set(1, n) - s; }

// Every size-r subset of [n] contained in exactly `want` members (want == 0
// means "at least one"). Returns the first offending subset.
std::optional<std::pair<VarSet, std::size_t>> find_cover_violation(const SetSystem& sys, unsigned n, unsigned r,
                                                                   std::size_t want) {
  for (std::uint64_t mask : WeightRange(n, r)) {
    const VarSet sub = VarSet::from_mask(mask);
    std::size_t hits = 0;
    for (const auto& s : sys.sets)
      if (sub.subset_of(s)) ++hits;
    if (want == 0 ? hits == 0 : hits != want) return std::make_pair(sub, hits);
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(Method m) {
  for (auto [method, name] : kMethodNames)
    if (method == m) return name;
  return "unknown";
}

Method parse_method(const std::string& tag) {
  for (auto [method, name] : kMethodNames)
    if (tag == name) return method;
  throw InputError("unknown construction method '" + tag + "'");
}

Metadata ConstructionResult::metadata() const {
  return {{"method", to_string(method)},
          {"n", std::to_string(formula.num_vars())},
          {"t", std::to_string(t)},
          {"claimed_count", claimed_count.str()}};
}

AdaptiveParams AdaptiveParams::make(Ratio alpha, unsigned k) {
  if (k < 2) throw InputError("adaptive construction needs k >= 2");
  if (alpha.num <= 0 || alpha.num >= alpha.den) throw InputError("alpha must lie strictly between 0 and 1");
  // b = (k-1) / (1 - alpha) = (k-1) * den / (den - num)
  const std::int64_t numer = static_cast<std::int64_t>(k - 1) * alpha.den;
  const std::int64_t denom = alpha.den - alpha.num;
  if (numer % denom != 0)
    throw InputError("block size b = (k-1)/(1-alpha) = " + Ratio::make(numer, denom).str() + " is not an integer");
  AdaptiveParams p{alpha, k, static_cast<unsigned>(numer / denom)};
  // alpha * b = b - k + 1 is integral whenever b is.
  return p;
}

ConstructionResult small_threshold_formula(unsigned n, unsigned t, unsigned k) {
  if (k == 0) throw InputError("k must be positive");
  if (static_cast<std::uint64_t>(k) * t > n)
    throw InputError("small-threshold construction needs n >= k*t (n=" + std::to_string(n) + ", k*t=" +
                     std::to_string(k * t) + ")");
  std::vector<Clause> clauses;
  for (unsigned block = 0; block < t; ++block) clauses.emplace_back(range_set(block * k + 1, k), VarSet{});
  for (unsigned v = t * k + 1; v <= n; ++v) clauses.emplace_back(VarSet{}, VarSet{v});
  return {Formula(n, k, std::move(clauses)), t, ipow(k, t), Method::SmallThreshold};
}

ConstructionResult full_window_formula(unsigned b, unsigned k) {
  if (k == 0 || b < k)
    throw InputError("full-window construction needs b >= k >= 1 (b=" + std::to_string(b) + ", k=" +
                     std::to_string(k) + ")");
  std::vector<Clause> clauses;
  for (std::uint64_t mask : WeightRange(b, k)) clauses.emplace_back(VarSet::from_mask(mask), VarSet{});
  return {Formula(b, k, std::move(clauses)), b - k + 1, binomial(b, k - 1), Method::FullWindow};
}

ConstructionResult adaptive_block_formula(unsigned n, Ratio alpha, unsigned k) {
  const AdaptiveParams p = AdaptiveParams::make(alpha, k);
  if (p.b < k) throw InputError("block size b = " + std::to_string(p.b) + " is smaller than k");
  if (n % p.b != 0)
    throw InputError("block size b = " + std::to_string(p.b) + " does not divide n = " + std::to_string(n));
  const ConstructionResult block = full_window_formula(p.b, k);
  ConstructionResult r = product_combine(std::vector<ConstructionResult>(n / p.b, block));
  r.method = Method::Adaptive;
  return r;
}

ConstructionResult product_combine(const std::vector<ConstructionResult>& parts) {
  if (parts.empty()) throw InputError("product of zero parts");
  if (parts.size() == 1) return parts.front();
  unsigned offset = 0, width = 1, t = 0;
  BigInt count = 1;
  std::vector<Clause> clauses;
  for (const auto& part : parts) {
    for (const auto& c : part.formula.clauses()) {
      std::vector<Literal> lits = c.literals();
      for (auto& l : lits) l.code += l.negated() ? -static_cast<std::int32_t>(offset) : static_cast<std::int32_t>(offset);
      clauses.push_back(Clause::from_literals(lits));
    }
    offset += part.formula.num_vars();
    width = std::max(width, part.formula.width());
    t += part.t;
    count *= part.claimed_count;
  }
  return {Formula(offset, width, std::move(clauses)), t, count, Method::Product};
}

BlockPlan block_product_plan(unsigned n, unsigned t, unsigned k) {
  if (t > n || k == 0) throw InputError("block product needs t <= n and k >= 1");
  // best[a][b]: largest product for a variables at threshold b; last block kept for backtracking.
  std::vector<std::vector<BigInt>> best(n + 1, std::vector<BigInt>(t + 1, 0));
  std::vector<std::vector<std::pair<unsigned, unsigned>>> last(n + 1, std::vector<std::pair<unsigned, unsigned>>(t + 1));
  best[0][0] = 1;
  for (unsigned a = 1; a <= n; ++a)
    for (unsigned b = 0; b <= std::min(a, t); ++b)
      for (unsigned s = 1; s <= a; ++s) {
        auto consider = [&](unsigned u) {
          const BigInt& rest = best[a - s][b - u];
          if (rest == 0) return;
          BigInt v = binomial(s, u) * rest;
          if (v > best[a][b]) {
            best[a][b] = std::move(v);
            last[a][b] = {s, u};
          }
        };
        // A u = 0 block carries no clauses; otherwise the clause width s-u+1 must be <= k.
        consider(0);
        for (unsigned u = std::max(1U, s + 1 > k ? s + 1 - k : 0); u <= std::min(s, b); ++u) consider(u);
      }
  BlockPlan plan;
  plan.value = best[n][t];
  for (unsigned a = n, b = t; a > 0;) {
    const auto blk = last[a][b];
    plan.blocks.push_back(blk);
    a -= blk.first;
    b -= blk.second;
  }
  std::reverse(plan.blocks.begin(), plan.blocks.end());
  return plan;
}

ConstructionResult block_product_formula(unsigned n, unsigned t, unsigned k) {
  if (n == 0) throw InputError("n must be positive");
  const BlockPlan plan = block_product_plan(n, t, k);
  std::vector<Clause> clauses;
  unsigned first = 1;
  for (auto [s, u] : plan.blocks) {
    if (u > 0)
      for (std::uint64_t mask : WeightRange(s, s - u + 1)) {
        VarSet c;
        for (Var v : VarSet::from_mask(mask).elements()) c.insert(v + first - 1);
        clauses.emplace_back(c, VarSet{});
      }
    first += s;
  }
  return {Formula(n, k, std::move(clauses)), t, plan.value, Method::Product};
}

ConstructionResult two_cnf_optimal(unsigned n, unsigned t) {
  if (n == 0) throw InputError("n must be positive");
  if (t > n) throw InputError("t = " + std::to_string(t) + " exceeds n = " + std::to_string(n));
  if (t == n) {
    std::vector<Clause> units;
    for (Var v = 1; v <= n; ++v) units.emplace_back(VarSet{v}, VarSet{});
    return {Formula(n, 2, std::move(units)), t, 1, Method::TwoCnfOptimal};
  }
  const unsigned blocks = n - t;
  const unsigned q = n / blocks;
  const unsigned r = n % blocks;
  std::vector<Clause> clauses;
  unsigned next = 1;
  for (unsigned b = 0; b < blocks; ++b) {
    const unsigned size = b < blocks - r ? q : q + 1;
    for (unsigned i = 0; i < size; ++i)
      for (unsigned j = i + 1; j < size; ++j) clauses.emplace_back(VarSet{next + i, next + j}, VarSet{});
    next += size;
  }
  return {Formula(n, 2, std::move(clauses)), t, ipow(q, blocks - r) * ipow(q + 1, r), Method::TwoCnfOptimal};
}

ConstructionResult from_cover_design(const SetSystem& cover, unsigned n, unsigned k) {
  if (cover.n != n) throw InputError("set system universe does not match n");
  if (k > n) throw InputError("k exceeds n");
  const unsigned q = n - k;
  for (const auto& s : cover.sets)
    if (s.size() != q) throw InputError("cover set " + to_string(s) + " does not have size n-k = " + std::to_string(q));
  if (q >= 1) {
    if (auto bad = find_cover_violation(cover, n, q - 1, 0))
      throw InputError("covering property violated: subset " + to_string(bad->first) + " lies in no set");
  }
  std::vector<Clause> clauses;
  for (const auto& s : cover.sets) clauses.emplace_back(complement(s, n), VarSet{});
  // Count weight-(n-k) assignments rejected by some clause, i.e. ones-sets
  // containing a cover set.
  std::uint64_t rejected = 0;
  for (std::uint64_t mask : WeightRange(n, q)) {
    const VarSet ones = VarSet::from_mask(mask);
    for (const auto& s : cover.sets)
      if (s.subset_of(ones)) {
        ++rejected;
        break;
      }
  }
  return {Formula(n, std::max(k, 1U), std::move(clauses)), q, binomial(n, k) - rejected, Method::FromCover};
}

ConstructionResult from_steiner(const SetSystem& design, unsigned n) {
  if (design.n != n) throw InputError("design universe does not match n");
  const auto q = design.uniform_size();
  if (!q) throw InputError("Steiner design must be a non-empty uniform set system");
  const unsigned k = n - *q;
  unsigned r = 0;
  if (design.strength) {
    r = *design.strength;
    if (r == 0 || r > *q) throw InputError("design strength out of range");
    if (auto bad = find_cover_violation(design, n, r, 1))
      throw InputError("Steiner property violated: " + std::to_string(r) + "-subset " + to_string(bad->first) +
                       " lies in " + std::to_string(bad->second) + " blocks");
  } else {
    for (unsigned cand = 1; cand <= *q && r == 0; ++cand)
      if (!find_cover_violation(design, n, cand, 1)) r = cand;
    if (r == 0) {
      const auto bad = find_cover_violation(design, n, 1, 1);
      throw InputError("not a Steiner system for any strength; e.g. point set " + to_string(bad->first) + " lies in " +
                       std::to_string(bad->second) + " blocks");
    }
  }
  const unsigned t = r + 1;
  if (n <= k + t)
    throw InputError("from-steiner needs n > k + t (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                     ", t=" + std::to_string(t) + ")");
  std::vector<Clause> clauses;
  for (const auto& s : design.sets) clauses.emplace_back(complement(s, n), VarSet{});
  const BigInt scaled = BigInt(k) * binomial(n, t - 1);
  if (scaled % t != 0) throw VerificationError("k * C(n, t-1) is not divisible by t for a Steiner design");
  return {Formula(n, k, std::move(clauses)), t, scaled / t, Method::FromSteiner};
}

ConstructionCheck verify_construction(const ConstructionResult& r, unsigned threads) {
  ConstructionCheck check;
  check.admissible = is_admissible(r.formula, r.t).admissible;
  check.count = count_weight_sat(r.formula, r.t, threads);
  check.count_matches = BigInt(check.count) == r.claimed_count;
  return check;
}

}  // namespace thrcnf
