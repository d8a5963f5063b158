#include "search/splus.hpp"

#include "formula/enumerate.hpp"
#include "formula/errors.hpp"
#include "search/layers.hpp"

#include <algorithm>
#include <bit>

namespace thrcnf {

namespace {

class SPlusSearch {
 public:
  SPlusSearch(unsigned n, unsigned m, unsigned k, std::uint64_t max_nodes)
      : max_nodes_(max_nodes), n_(n), m_(m), k_(k), d_(m + 1 - k), layers_(n) {
    ks_ = layers_.layer(k);
    us_ = layers_.layer(m + 1);
    zs_ = layers_.layer(m);
    sup_u_.resize(ks_.size());
    sup_z_.resize(ks_.size());
    for (std::size_t i = 0; i < ks_.size(); ++i) {
      for (auto u : layers_.supersets(ks_[i], m + 1)) sup_u_[i].push_back(layers_.rank(u));
      for (auto z : layers_.supersets(ks_[i], m)) sup_z_[i].push_back(layers_.rank(z));
    }
    sub_k_.resize(us_.size());
    for (std::size_t i = 0; i < us_.size(); ++i)
      for (auto kk : Layers::subsets(us_[i], k)) sub_k_[i].push_back(layers_.rank(kk));
    z_sup_u_.resize(zs_.size());
    for (std::size_t i = 0; i < zs_.size(); ++i)
      for (auto u : layers_.supersets(zs_[i], m + 1)) z_sup_u_[i].push_back(layers_.rank(u));
    cov_.assign(us_.size(), 0);
    hit_.assign(zs_.size(), 0);
    forbidden_.assign(ks_.size(), 0);
    unc_ = us_.size();
  }

  // Minimum number of hit m-sets; fills best_family_.
  std::uint64_t solve(bool symmetry) {
    symmetry_ = symmetry;
    collect_ = false;
    best_ = zs_.size() + 1;
    dfs(0);
    return best_;
  }

  // Every family attaining `optimum` hits, no symmetry breaking.
  std::vector<std::vector<std::uint64_t>> collect(std::uint64_t optimum) {
    symmetry_ = false;
    collect_ = true;
    best_ = optimum;
    optima_.clear();
    dfs(0);
    return optima_;
  }

  const std::vector<std::uint64_t>& best_family() const { return best_family_; }
  std::uint64_t nodes() const { return nodes_; }
  std::size_t num_zsets() const { return zs_.size(); }

 private:
  void include(std::uint32_t ki) {
    for (auto u : sup_u_[ki])
      if (cov_[u]++ == 0) --unc_;
    for (auto z : sup_z_[ki])
      if (hit_[z]++ == 0) ++hits_;
    chosen_.push_back(ks_[ki]);
  }
  void exclude(std::uint32_t ki) {
    chosen_.pop_back();
    for (auto z : sup_z_[ki])
      if (--hit_[z] == 0) --hits_;
    for (auto u : sup_u_[ki])
      if (--cov_[u] == 0) ++unc_;
  }

  std::uint64_t lower_bound() {
    const std::uint64_t demand = static_cast<std::uint64_t>(d_) * unc_;
    if (demand == 0) return 0;
    std::vector<std::uint64_t> bucket(n_ - m_ + 1, 0);
    for (std::size_t z = 0; z < zs_.size(); ++z) {
      if (hit_[z]) continue;
      unsigned deg = 0;
      for (auto u : z_sup_u_[z]) deg += cov_[u] == 0;
      ++bucket[deg];
    }
    std::uint64_t got = 0, taken = 0;
    for (unsigned deg = n_ - m_; deg >= 1; --deg) {
      const std::uint64_t need = (demand - got + deg - 1) / deg;
      if (bucket[deg] >= need) return taken + need;
      got += bucket[deg] * deg;
      taken += bucket[deg];
    }
    return zs_.size() + 1;  // demand cannot be met
  }

  void dfs(unsigned depth) {
    if (++nodes_ > max_nodes_ && max_nodes_)
      throw RefusedError("S+ search exceeded its node budget of " + std::to_string(max_nodes_));
    if (unc_ == 0) {
      if (collect_) {
        if (hits_ == best_) optima_.push_back(chosen_);
      } else if (hits_ < best_) {
        best_ = hits_;
        best_family_ = chosen_;
      }
      return;
    }
    const std::uint64_t lb = lower_bound();
    if (collect_ ? hits_ + lb > best_ : hits_ + lb >= best_) return;

    std::size_t pick = us_.size();
    std::size_t fewest = SIZE_MAX;
    for (std::size_t u = 0; u < us_.size(); ++u) {
      if (cov_[u]) continue;
      std::size_t allowed = 0;
      for (auto kk : sub_k_[u]) allowed += !forbidden_[kk];
      if (allowed < fewest) {
        fewest = allowed;
        pick = u;
        if (allowed == 0) return;
      }
    }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> kids;  // (new hits, k-set rank)
    for (auto kk : sub_k_[pick]) {
      if (forbidden_[kk]) continue;
      std::uint32_t fresh = 0;
      for (auto z : sup_z_[kk]) fresh += hit_[z] == 0;
      kids.emplace_back(fresh, kk);
    }
    std::sort(kids.begin(), kids.end());
    // At the root every k-subset of the chosen (m+1)-set is equivalent.
    if (symmetry_ && depth == 0) kids.resize(1);

    std::vector<std::uint32_t> banned;
    for (auto [fresh, kk] : kids) {
      if (collect_ ? hits_ + fresh > best_ : hits_ + fresh >= best_) {
        // Children are sorted by fresh hits, so the rest cannot improve either.
        break;
      }
      include(kk);
      dfs(depth + 1);
      exclude(kk);
      forbidden_[kk] = 1;
      banned.push_back(kk);
    }
    for (auto kk : banned) forbidden_[kk] = 0;
  }

  std::uint64_t max_nodes_;
  unsigned n_, m_, k_, d_;
  Layers layers_;
  std::vector<std::uint64_t> ks_, us_, zs_;
  std::vector<std::vector<std::uint32_t>> sup_u_, sup_z_, sub_k_, z_sup_u_;
  std::vector<std::uint32_t> cov_, hit_;
  std::vector<std::uint8_t> forbidden_;
  std::uint64_t unc_ = 0, hits_ = 0, best_ = 0, nodes_ = 0;
  bool symmetry_ = true, collect_ = false;
  std::vector<std::uint64_t> chosen_, best_family_;
  std::vector<std::vector<std::uint64_t>> optima_;
};

Formula family_formula(unsigned n, unsigned k, const std::vector<std::uint64_t>& family) {
  std::vector<Clause> clauses;
  for (auto mask : family) clauses.emplace_back(VarSet::from_mask(mask), VarSet{});
  return Formula(n, k, std::move(clauses));
}

void check_limits(unsigned n, unsigned t, unsigned k, const SearchLimits& limits) {
  const unsigned cap = k <= 2 ? limits.splus_max_n_k2 : k == 3 ? limits.splus_max_n_k3 : limits.splus_max_n_other;
  if (n > 26) throw RefusedError("S+ search supports at most 26 variables");
  if (n <= cap || limits.force) return;
  const unsigned m = n - t;
  throw RefusedError("S+(" + std::to_string(n) + "," + std::to_string(t) + "," + std::to_string(k) +
                     ") exceeds the search limit n <= " + std::to_string(cap) + " for k = " + std::to_string(k) +
                     " (" + binomial(n, k).str() + " candidate clauses, " + binomial(n, m + 1).str() +
                     " covering constraints, " + binomial(n, m).str() + " solution slots); use force to run anyway");
}

bool has_disjoint(const std::vector<std::uint64_t>& family, unsigned need, std::size_t from, std::uint64_t used) {
  if (need == 0) return true;
  for (std::size_t i = from; i < family.size(); ++i)
    if (!(family[i] & used) && has_disjoint(family, need - 1, i + 1, used | family[i])) return true;
  return false;
}

}  // namespace

bool s_equals_s_plus_known(unsigned n, unsigned t, unsigned k) {
  return k <= 2 || t == 0 || k * t <= n || t + k >= n;
}

Certificate exact_monotone_S(unsigned n, unsigned t, unsigned k, const SearchLimits& limits) {
  if (k == 0) throw InputError("exact_monotone_S needs k >= 1");
  if (t > n) throw InputError("exact_monotone_S needs t <= n");
  check_limits(n, t, k, limits);
  Stopwatch clock;
  Certificate cert;
  cert.quantity = Quantity::SPlus;
  cert.params = {{"n", n}, {"t", t}, {"k", k}};
  cert.s_gap = !s_equals_s_plus_known(n, t, k);

  const unsigned m = n - t;
  std::vector<std::uint64_t> family;
  if (m + 1 > n) {
    cert.value = 1;
  } else if (m + 1 <= k) {
    for (std::uint64_t u : WeightRange(n, m + 1)) family.push_back(u);
    cert.value = binomial(n, t);
  } else {
    SPlusSearch search(n, m, k, limits.max_nodes);
    const std::uint64_t hits = search.solve(true);
    family = search.best_family();
    cert.value = search.num_zsets() - hits;
    cert.nodes_explored = search.nodes();
  }
  const Formula witness = family_formula(n, k, family);

  if (!witness.is_monotone() || witness.max_clause_width() > k || !is_admissible(witness, t).admissible ||
      BigInt(count_weight_sat(witness, t)) != cert.value)
    throw VerificationError("S+ witness failed re-verification at (" + std::to_string(n) + "," + std::to_string(t) +
                            "," + std::to_string(k) + ")");
  cert.verified = true;
  cert.witness = witness;
  cert.elapsed_ms = clock.ms();
  if (cert.s_gap) cert.notes.push_back("monotone optimum only; S may be larger at these parameters");
  return cert;
}

UniquenessReport uniqueness_probe(unsigned n, unsigned t, unsigned k, const SearchLimits& limits) {
  if (k == 0 || k * t > n) throw InputError("uniqueness_probe needs k >= 1 and k t <= n");
  check_limits(n, t, k, limits);
  Stopwatch clock;
  UniquenessReport rep;
  rep.n = n;
  rep.t = t;
  rep.k = k;
  const unsigned m = n - t;
  std::vector<std::vector<std::uint64_t>> optima;
  if (m + 1 > n) {
    optima.push_back({});
    rep.optimum = 1;
  } else if (m + 1 <= k) {
    std::vector<std::uint64_t> all;
    for (std::uint64_t u : WeightRange(n, m + 1)) all.push_back(u);
    optima.push_back(all);
    rep.optimum = binomial_u64(n, t);
  } else {
    SPlusSearch search(n, m, k, limits.max_nodes);
    const std::uint64_t hits = search.solve(true);
    optima = search.collect(hits);
    rep.optimum = search.num_zsets() - hits;
    rep.nodes_explored = search.nodes();
  }
  rep.optima = optima.size();
  for (const auto& fam : optima) {
    if (has_disjoint(fam, t, 0, 0))
      ++rep.with_disjoint_clauses;
    else if (!rep.counterexample)
      rep.counterexample = family_formula(n, k, fam);
  }
  rep.all_have_disjoint_clauses = rep.with_disjoint_clauses == rep.optima;
  rep.elapsed_ms = clock.ms();
  return rep;
}

}  // namespace thrcnf
