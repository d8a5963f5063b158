#include "search/set_cover.hpp"

#include "formula/errors.hpp"
#include "formula/enumerate.hpp"
#include "search/layers.hpp"
#include "search/splus.hpp"

#include <algorithm>
#include <bit>

namespace thrcnf {

namespace {

// Minimum cardinality set cover by branch and bound. Branches on the
// uncovered element with the fewest usable candidates; a candidate that was
// tried is excluded from its later siblings.
class CoverSearch {
 public:
  CoverSearch(std::vector<std::vector<std::uint32_t>> elem_cands, std::size_t num_cands, std::uint64_t max_nodes)
      : max_nodes_(max_nodes), elem_cands_(std::move(elem_cands)), cand_elems_(num_cands) {
    for (std::uint32_t e = 0; e < elem_cands_.size(); ++e)
      for (auto c : elem_cands_[e]) cand_elems_[c].push_back(e);
    cov_.assign(elem_cands_.size(), 0);
    forbidden_.assign(num_cands, 0);
    mark_.assign(num_cands, 0);
    unc_ = elem_cands_.size();
  }

  std::size_t solve(bool root_symmetry) {
    symmetry_ = root_symmetry;
    best_ = cand_elems_.size() + 1;
    dfs(0);
    return best_;
  }
  const std::vector<std::uint32_t>& best() const { return best_set_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::size_t lower_bound() {
    if (unc_ == 0) return 0;
    std::size_t gain = 0;
    for (std::size_t c = 0; c < cand_elems_.size(); ++c) {
      if (forbidden_[c]) continue;
      std::size_t g = 0;
      for (auto e : cand_elems_[c]) g += cov_[e] == 0;
      gain = std::max(gain, g);
    }
    if (gain == 0) return cand_elems_.size() + 1;
    const std::size_t by_gain = (unc_ + gain - 1) / gain;
    // Uncovered elements with pairwise disjoint usable candidate lists each need their own set.
    ++epoch_;
    std::size_t packed = 0;
    for (std::size_t e = 0; e < elem_cands_.size(); ++e) {
      if (cov_[e]) continue;
      bool clash = false;
      for (auto c : elem_cands_[e])
        if (!forbidden_[c] && mark_[c] == epoch_) {
          clash = true;
          break;
        }
      if (clash) continue;
      ++packed;
      for (auto c : elem_cands_[e])
        if (!forbidden_[c]) mark_[c] = epoch_;
    }
    return std::max(by_gain, packed);
  }

  void dfs(unsigned depth) {
    if (++nodes_ > max_nodes_ && max_nodes_)
      throw RefusedError("set-cover search exceeded its node budget of " + std::to_string(max_nodes_));
    if (unc_ == 0) {
      if (chosen_.size() < best_) {
        best_ = chosen_.size();
        best_set_ = chosen_;
      }
      return;
    }
    if (chosen_.size() + lower_bound() >= best_) return;

    std::size_t pick = 0, fewest = SIZE_MAX;
    for (std::size_t e = 0; e < elem_cands_.size(); ++e) {
      if (cov_[e]) continue;
      std::size_t usable = 0;
      for (auto c : elem_cands_[e]) usable += !forbidden_[c];
      if (usable < fewest) {
        fewest = usable;
        pick = e;
        if (usable == 0) return;
      }
    }
    std::vector<std::pair<std::size_t, std::uint32_t>> kids;  // (-gain, candidate)
    for (auto c : elem_cands_[pick]) {
      if (forbidden_[c]) continue;
      std::size_t g = 0;
      for (auto e : cand_elems_[c]) g += cov_[e] == 0;
      kids.emplace_back(SIZE_MAX - g, c);
    }
    std::sort(kids.begin(), kids.end());
    if (symmetry_ && depth == 0) kids.resize(1);

    std::vector<std::uint32_t> banned;
    for (auto [neg_gain, c] : kids) {
      for (auto e : cand_elems_[c])
        if (cov_[e]++ == 0) --unc_;
      chosen_.push_back(c);
      dfs(depth + 1);
      chosen_.pop_back();
      for (auto e : cand_elems_[c])
        if (--cov_[e] == 0) ++unc_;
      forbidden_[c] = 1;
      banned.push_back(c);
    }
    for (auto c : banned) forbidden_[c] = 0;
  }

  std::uint64_t max_nodes_;
  std::vector<std::vector<std::uint32_t>> elem_cands_;
  std::vector<std::vector<std::uint32_t>> cand_elems_;
  std::vector<std::uint32_t> cov_;
  std::vector<std::uint8_t> forbidden_;
  std::vector<std::uint64_t> mark_;
  std::uint64_t epoch_ = 0;
  std::size_t unc_ = 0, best_ = 0;
  std::uint64_t nodes_ = 0;
  bool symmetry_ = true;
  std::vector<std::uint32_t> chosen_, best_set_;
};

void check_limit(const char* what, unsigned n, const SearchLimits& limits, std::size_t elems, std::size_t cands) {
  if (n > 26) throw RefusedError(std::string(what) + " search supports at most 26 points");
  if (n <= limits.set_cover_max_n || limits.force) return;
  throw RefusedError(std::string(what) + " search with n = " + std::to_string(n) + " exceeds the limit n <= " +
                     std::to_string(limits.set_cover_max_n) + " (" + std::to_string(elems) + " elements, " +
                     std::to_string(cands) + " candidate sets); use force to run anyway");
}

struct CoverRun {
  std::vector<std::uint64_t> family;
  std::uint64_t nodes = 0;
};

// Every elem_size-set must contain (or, if !cand_inside_elem, lie inside) a
// chosen cand_size-set.
CoverRun run_cover(unsigned n, unsigned elem_size, unsigned cand_size, bool cand_inside_elem, std::uint64_t max_nodes) {
  Layers layers(n);
  const auto elems = layers.layer(elem_size);
  const auto cands = layers.layer(cand_size);
  std::vector<std::vector<std::uint32_t>> elem_cands(elems.size());
  for (std::size_t e = 0; e < elems.size(); ++e) {
    const auto rel = cand_inside_elem ? Layers::subsets(elems[e], cand_size) : layers.supersets(elems[e], cand_size);
    for (auto c : rel) elem_cands[e].push_back(layers.rank(c));
  }
  CoverSearch search(std::move(elem_cands), cands.size(), max_nodes);
  search.solve(true);
  CoverRun run;
  for (auto c : search.best()) run.family.push_back(cands[c]);
  run.nodes = search.nodes();
  return run;
}

SetSystem to_system(unsigned n, const std::vector<std::uint64_t>& family) {
  std::vector<VarSet> sets;
  for (auto m : family) sets.push_back(VarSet::from_mask(m));
  return SetSystem(n, std::move(sets));
}

std::vector<std::uint64_t> masks_of(const SetSystem& s) {
  std::vector<std::uint64_t> out;
  for (const auto& v : s.sets) out.push_back(v.mask().value_or(0));
  return out;
}

// Direct re-check of the Turan property: every q-set contains a member.
bool turan_holds(unsigned n, unsigned q, unsigned k, const SetSystem& s) {
  if (s.uniform_size() && *s.uniform_size() != k) return false;
  const auto fam = masks_of(s);
  for (std::uint64_t u : WeightRange(n, q))
    if (std::none_of(fam.begin(), fam.end(), [u](std::uint64_t f) { return (f & ~u) == 0; })) return false;
  return true;
}

bool cover_holds(unsigned n, unsigned q, unsigned k, const SetSystem& s) {
  if (s.uniform_size() && *s.uniform_size() != q) return false;
  const auto fam = masks_of(s);
  for (std::uint64_t e : WeightRange(n, k))
    if (std::none_of(fam.begin(), fam.end(), [e](std::uint64_t f) { return (e & ~f) == 0; })) return false;
  return true;
}

}  // namespace

Certificate turan_number(unsigned n, unsigned q, unsigned k, const SearchLimits& limits) {
  if (!(k <= q && q <= n)) throw InputError("turan_number needs k <= q <= n");
  if (n > 26) throw RefusedError("Turan search supports at most 26 points");
  check_limit("Turan", n, limits, binomial_u64(n, q), binomial_u64(n, k));
  Stopwatch clock;
  const CoverRun run = run_cover(n, q, k, true, limits.max_nodes);
  Certificate cert;
  cert.quantity = Quantity::Turan;
  cert.params = {{"n", n}, {"q", q}, {"k", k}};
  cert.value = run.family.size();
  cert.nodes_explored = run.nodes;
  const SetSystem witness = to_system(n, run.family);
  if (witness.size() != run.family.size() || !turan_holds(n, q, k, witness))
    throw VerificationError("Turan witness failed re-verification");
  cert.verified = true;
  cert.witness = witness;
  cert.elapsed_ms = clock.ms();
  return cert;
}

Certificate covering_number(unsigned n, unsigned q, unsigned k, const SearchLimits& limits) {
  if (!(k <= q && q <= n)) throw InputError("covering_number needs k <= q <= n");
  if (n > 26) throw RefusedError("covering search supports at most 26 points");
  check_limit("covering", n, limits, binomial_u64(n, k), binomial_u64(n, q));
  Stopwatch clock;
  const CoverRun run = run_cover(n, k, q, false, limits.max_nodes);
  Certificate cert;
  cert.quantity = Quantity::Cover;
  cert.params = {{"n", n}, {"q", q}, {"k", k}};
  cert.value = run.family.size();
  cert.nodes_explored = run.nodes;
  const SetSystem witness = to_system(n, run.family);
  if (witness.size() != run.family.size() || !cover_holds(n, q, k, witness))
    throw VerificationError("covering witness failed re-verification");
  cert.verified = true;
  cert.witness = witness;
  cert.elapsed_ms = clock.ms();
  return cert;
}

TuranIdentityReport verify_turan_identity(unsigned n, unsigned k, const SearchLimits& limits) {
  TuranIdentityReport rep;
  rep.n = n;
  rep.k = k;
  if (k == 0 || k + 1 > n) {
    rep.skipped = true;
    rep.notice = "T(" + std::to_string(n) + "," + std::to_string(k + 1) + "," + std::to_string(k) +
                 ") is undefined (q > n); skipped";
    return rep;
  }
  rep.turan = turan_number(n, k + 1, k, limits);
  rep.cover = covering_number(n, n - k, n - k - 1, limits);
  rep.splus = exact_monotone_S(n, n - k, k, limits);
  rep.complement = binomial(n, k) - rep.splus->value;
  rep.holds = rep.turan->value == rep.cover->value && rep.cover->value == rep.complement;
  if (!rep.holds)
    throw VerificationError("Turan identity fails at n=" + std::to_string(n) + ", k=" + std::to_string(k) + ": T=" +
                            rep.turan->value.str() + " " + certificate_to_json(*rep.turan).dump() + "; C=" +
                            rep.cover->value.str() + " " + certificate_to_json(*rep.cover).dump() +
                            "; C(n,k)-S+=" + rep.complement.str() + " " + certificate_to_json(*rep.splus).dump());
  return rep;
}

}  // namespace thrcnf
