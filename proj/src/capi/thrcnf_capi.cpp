#include "thrcnf/thrcnf.h"

#include "construct/constructions.hpp"
#include "cover/cover.hpp"
#include "formula/dimacs.hpp"
#include "formula/enumerate.hpp"
#include "formula/errors.hpp"
#include "formula/set_system.hpp"
#include "report/harness.hpp"
#include "report/table.hpp"
#include "search/oracles.hpp"
#include "search/set_cover.hpp"
#include "search/splus.hpp"
#include "transform/high_threshold.hpp"
#include "twocnf/conflict_graph.hpp"
#include "twocnf/implication_graph.hpp"
#include "twocnf/transforms.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <thread>

struct thrcnf_formula {
  thrcnf::DimacsFile file;
};

namespace {

using thrcnf::Json;

thread_local std::string g_error;
thread_local std::size_t g_error_line = 0;

thrcnf_status fail(thrcnf_status s, const std::string& msg, std::size_t line = 0) {
  g_error = msg;
  g_error_line = line;
  return s;
}

template <class Fn>
thrcnf_status guard(Fn&& fn) noexcept {
  g_error.clear();
  g_error_line = 0;
  try {
    fn();
    return THRCNF_OK;
  } catch (const thrcnf::ParseError& e) {
    return fail(THRCNF_E_PARSE, e.what(), e.line());
  } catch (const Json::parse_error& e) {
    return fail(THRCNF_E_PARSE, e.what());
  } catch (const Json::exception& e) {
    return fail(THRCNF_E_INPUT, e.what());
  } catch (const thrcnf::InputError& e) {
    return fail(THRCNF_E_INPUT, e.what());
  } catch (const thrcnf::RefusedError& e) {
    return fail(THRCNF_E_REFUSED, e.what());
  } catch (const thrcnf::VerificationError& e) {
    return fail(THRCNF_E_VERIFY, e.what());
  } catch (const std::exception& e) {
    return fail(THRCNF_E_INTERNAL, e.what());
  } catch (...) {
    return fail(THRCNF_E_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw thrcnf::InputError(std::string(what) + " must not be NULL");
}

thrcnf::SearchLimits parse_limits(const char* text) {
  thrcnf::SearchLimits l;
  if (!text || !*text) return l;
  const Json j = Json::parse(text);
  if (!j.is_object()) throw thrcnf::ParseError("limits must be a JSON object", 0);
  for (const auto& [key, v] : j.items()) {
    if (key == "force")
      l.force = v.get<bool>();
    else if (key == "max_nodes")
      l.max_nodes = v.get<std::uint64_t>();
    else if (key == "splus_max_n_k2")
      l.splus_max_n_k2 = v.get<unsigned>();
    else if (key == "splus_max_n_k3")
      l.splus_max_n_k3 = v.get<unsigned>();
    else if (key == "splus_max_n_other")
      l.splus_max_n_other = v.get<unsigned>();
    else if (key == "set_cover_max_n")
      l.set_cover_max_n = v.get<unsigned>();
    else if (key == "oracle_max_slice")
      l.oracle_max_slice = v.get<unsigned>();
    else if (key == "mis_max_n")
      l.mis_max_n = v.get<unsigned>();
    else
      throw thrcnf::InputError("unknown limit '" + key + "'");
  }
  return l;
}

unsigned get_param(const Json& p, const char* name) {
  if (!p.contains(name)) throw thrcnf::InputError(std::string("missing parameter '") + name + "'");
  const long long v = p.at(name).get<long long>();
  if (v < 0 || v > 4096) throw thrcnf::InputError(std::string("parameter '") + name + "' out of range");
  return static_cast<unsigned>(v);
}

std::string formula_meta_name(const thrcnf::Metadata& meta, const std::string& key) {
  auto it = meta.find(key);
  return it == meta.end() ? std::string() : it->second;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw thrcnf::InputError("cannot write '" + path + "'");
  out << text;
}

void write_witness(thrcnf::Certificate& cert, const std::string& path) {
  if (const auto* f = std::get_if<thrcnf::Formula>(&cert.witness)) {
    thrcnf::Metadata meta;
    meta["quantity"] = to_string(cert.quantity);
    for (const auto& [k, v] : cert.params) meta[k] = std::to_string(v);
    write_text(path, thrcnf::write_dimacs(*f, meta));
  } else if (const auto* s = std::get_if<thrcnf::SetSystem>(&cert.witness)) {
    write_text(path, thrcnf::set_system_to_json(*s));
  } else if (const auto* g = std::get_if<thrcnf::ConflictGraph>(&cert.witness)) {
    write_text(path, "c graph on " + std::to_string(g->n) + " vertices\n" + g->edge_list());
  } else {
    return;
  }
  cert.witness_file = path;
}

Json certificate_summary(const std::optional<thrcnf::Certificate>& c) {
  return c ? thrcnf::certificate_to_json(*c) : Json(nullptr);
}

Json run_search(const std::string& q, const Json& p, const thrcnf::SearchLimits& limits, const char* witness_path) {
  using namespace thrcnf;
  std::optional<Certificate> cert;
  if (q == "splus") {
    cert = exact_monotone_S(get_param(p, "n"), get_param(p, "t"), get_param(p, "k"), limits);
  } else if (q == "turan") {
    cert = turan_number(get_param(p, "n"), get_param(p, "q"), get_param(p, "k"), limits);
  } else if (q == "cover") {
    cert = covering_number(get_param(p, "n"), get_param(p, "q"), get_param(p, "k"), limits);
  } else if (q == "oracle") {
    cert = median_closed_oracle(get_param(p, "n"), get_param(p, "t"), limits);
  } else if (q == "mis") {
    cert = max_mis_over_graphs(get_param(p, "n"), get_param(p, "s"), limits);
  } else if (q == "uniqueness") {
    const auto r = uniqueness_probe(get_param(p, "n"), get_param(p, "t"), get_param(p, "k"), limits);
    Json j = {{"schema", 1},
              {"quantity", "uniqueness"},
              {"params", {{"n", r.n}, {"t", r.t}, {"k", r.k}}},
              {"optimum", r.optimum},
              {"optima", r.optima},
              {"with_disjoint_clauses", r.with_disjoint_clauses},
              {"all_have_disjoint_clauses", r.all_have_disjoint_clauses},
              {"counterexample", r.counterexample ? Json(to_string(*r.counterexample)) : Json(nullptr)},
              {"elapsed_ms", r.elapsed_ms},
              {"nodes_explored", r.nodes_explored}};
    if (witness_path && r.counterexample) {
      write_text(witness_path, write_dimacs(*r.counterexample));
      j["counterexample_file"] = witness_path;
    }
    return j;
  } else if (q == "identity") {
    const auto r = verify_turan_identity(get_param(p, "n"), get_param(p, "k"), limits);
    Json j = {{"schema", 1},
              {"quantity", "turan_identity"},
              {"params", {{"n", r.n}, {"k", r.k}}},
              {"skipped", r.skipped},
              {"holds", r.holds}};
    if (!r.notice.empty()) j["notice"] = r.notice;
    if (!r.skipped) {
      j["turan"] = certificate_summary(r.turan);
      j["cover"] = certificate_summary(r.cover);
      j["splus"] = certificate_summary(r.splus);
      j["complement"] = bigint_json(r.complement);
    }
    return j;
  } else {
    throw InputError("unknown search quantity '" + q + "'");
  }
  if (witness_path && *witness_path) write_witness(*cert, witness_path);
  return certificate_to_json(*cert);
}

thrcnf::Formula apply_op(const std::string& op, const thrcnf::Formula& f, unsigned t, unsigned k, bool check,
                         thrcnf::TransformLog& log) {
  using namespace thrcnf;
  TwoCnfOptions two;
  two.check_invariants = check;
  NormalizeOptions norm;
  norm.check_invariants = check;
  if (op == "acyclify") return acyclify(f, t, two, &log);
  if (op == "monotonize2") return monotonize2(f, t, two, &log);
  if (op == "monotonize-high") return monotonize_high_threshold(f, k, norm, &log);
  if (op == "remove-redundant") return remove_redundant(f, t, &log);
  if (op == "widen") return widen_clause(f, t, k, &log);
  if (op == "normalize") return normalize(f, t, k, norm, &log);
  throw InputError("unknown transform '" + op + "'");
}

}  // namespace

extern "C" {

const char* thrcnf_last_error(void) { return g_error.c_str(); }
size_t thrcnf_last_error_line(void) { return g_error_line; }
void thrcnf_string_free(char* s) { std::free(s); }
const char* thrcnf_version(void) { return "1.0.0"; }

const char* thrcnf_status_name(thrcnf_status s) {
  switch (s) {
    case THRCNF_OK: return "ok";
    case THRCNF_E_INPUT: return "input error";
    case THRCNF_E_PARSE: return "parse error";
    case THRCNF_E_REFUSED: return "refused";
    case THRCNF_E_VERIFY: return "verification failure";
    case THRCNF_E_INTERNAL: return "internal error";
  }
  return "unknown";
}

unsigned thrcnf_default_threads(void) {
  if (const char* env = std::getenv("THRCNF_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

thrcnf_status thrcnf_formula_new(unsigned n, unsigned width, const int32_t* lits, size_t num_lits,
                                 thrcnf_formula** out) {
  return guard([&] {
    require(out, "out");
    if (num_lits) require(lits, "lits");
    std::vector<thrcnf::Clause> clauses;
    std::vector<thrcnf::Literal> cur;
    for (size_t i = 0; i < num_lits; ++i) {
      if (lits[i] == 0) {
        clauses.push_back(thrcnf::Clause::from_literals(cur));
        cur.clear();
      } else {
        cur.push_back(thrcnf::Literal{lits[i]});
      }
    }
    if (!cur.empty()) throw thrcnf::InputError("last clause is not terminated by 0");
    *out = new thrcnf_formula{{thrcnf::Formula(n, width, std::move(clauses)), {}}};
  });
}

thrcnf_status thrcnf_formula_parse(const char* dimacs, thrcnf_formula** out) {
  return guard([&] {
    require(dimacs, "dimacs");
    require(out, "out");
    *out = new thrcnf_formula{thrcnf::parse_dimacs(dimacs)};
  });
}

thrcnf_status thrcnf_formula_read(const char* path, thrcnf_formula** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new thrcnf_formula{thrcnf::read_dimacs_file(path)};
  });
}

thrcnf_status thrcnf_formula_write(const thrcnf_formula* f, const char* path) {
  return guard([&] {
    require(f, "formula");
    require(path, "path");
    thrcnf::write_dimacs_file(path, f->file.formula, f->file.meta);
  });
}

thrcnf_status thrcnf_formula_to_dimacs(const thrcnf_formula* f, char** out) {
  return guard([&] {
    require(f, "formula");
    require(out, "out");
    *out = dup(thrcnf::write_dimacs(f->file.formula, f->file.meta));
  });
}

thrcnf_status thrcnf_formula_clone(const thrcnf_formula* f, thrcnf_formula** out) {
  return guard([&] {
    require(f, "formula");
    require(out, "out");
    *out = new thrcnf_formula{f->file};
  });
}

void thrcnf_formula_free(thrcnf_formula* f) { delete f; }

unsigned thrcnf_formula_num_vars(const thrcnf_formula* f) { return f ? f->file.formula.num_vars() : 0; }
unsigned thrcnf_formula_width(const thrcnf_formula* f) { return f ? f->file.formula.width() : 0; }
size_t thrcnf_formula_num_clauses(const thrcnf_formula* f) { return f ? f->file.formula.size() : 0; }
int thrcnf_formula_is_monotone(const thrcnf_formula* f) { return f && f->file.formula.is_monotone() ? 1 : 0; }

thrcnf_status thrcnf_formula_clause(const thrcnf_formula* f, size_t index, int32_t* buf, size_t cap, size_t* len) {
  return guard([&] {
    require(f, "formula");
    require(len, "len");
    if (index >= f->file.formula.size()) throw thrcnf::InputError("clause index out of range");
    const auto lits = f->file.formula.clauses()[index].literals();
    *len = lits.size();
    if (cap < lits.size() + 1) throw thrcnf::InputError("buffer too small");
    require(buf, "buf");
    for (size_t i = 0; i < lits.size(); ++i) buf[i] = lits[i].code;
    buf[lits.size()] = 0;
  });
}

thrcnf_status thrcnf_formula_meta_get(const thrcnf_formula* f, const char* key, char** value) {
  return guard([&] {
    require(f, "formula");
    require(key, "key");
    require(value, "value");
    auto it = f->file.meta.find(key);
    *value = it == f->file.meta.end() ? nullptr : dup(it->second);
  });
}

thrcnf_status thrcnf_formula_meta_set(thrcnf_formula* f, const char* key, const char* value) {
  return guard([&] {
    require(f, "formula");
    require(key, "key");
    require(value, "value");
    const std::string k = key, v = value;
    if (k.empty() || k.find_first_of("= \t\n") != std::string::npos)
      throw thrcnf::InputError("metadata key must be non-empty without '=' or whitespace");
    if (v.find('\n') != std::string::npos) throw thrcnf::InputError("metadata value must be a single line");
    f->file.meta[k] = v;
  });
}

thrcnf_status thrcnf_formula_hash(const thrcnf_formula* f, char** out) {
  return guard([&] {
    require(f, "formula");
    require(out, "out");
    *out = dup(thrcnf::canonical_hash(f->file.formula));
  });
}

thrcnf_status thrcnf_formula_evaluate(const thrcnf_formula* f, const char* bits, int* result) {
  return guard([&] {
    require(f, "formula");
    require(bits, "bits");
    require(result, "result");
    *result = thrcnf::evaluate(f->file.formula, thrcnf::Assignment::parse(bits)) ? 1 : 0;
  });
}

thrcnf_status thrcnf_formula_count(const thrcnf_formula* f, unsigned t, unsigned threads, uint64_t* count) {
  return guard([&] {
    require(f, "formula");
    require(count, "count");
    if (t > f->file.formula.num_vars()) throw thrcnf::InputError("t exceeds the number of variables");
    *count = thrcnf::count_weight_sat(f->file.formula, t, std::max(1U, threads));
  });
}

thrcnf_status thrcnf_formula_check(const thrcnf_formula* f, unsigned t, unsigned threads, char** report) {
  return guard([&] {
    require(f, "formula");
    require(report, "report");
    const auto& F = f->file.formula;
    if (t > F.num_vars()) throw thrcnf::InputError("t exceeds the number of variables");
    const auto adm = thrcnf::is_admissible(F, t);
    const std::uint64_t count = thrcnf::count_weight_sat(F, t, std::max(1U, threads));
    Json j = {{"schema", 1},
              {"n", F.num_vars()},
              {"t", t},
              {"width", F.width()},
              {"clauses", F.size()},
              {"monotone", F.is_monotone()},
              {"width_profile", F.width_profile()},
              {"hash", thrcnf::canonical_hash(F)},
              {"admissible", adm.admissible},
              {"witness", adm.witness ? Json(adm.witness->str()) : Json(nullptr)},
              {"count", count}};
    const std::string claimed = formula_meta_name(f->file.meta, "claimed_count");
    const std::string declared_t = formula_meta_name(f->file.meta, "t");
    if (!claimed.empty() && (declared_t.empty() || declared_t == std::to_string(t))) {
      j["claimed_count"] = claimed;
      j["count_matches"] = thrcnf::BigInt(count) == thrcnf::BigInt(claimed);
    }
    *report = dup(j.dump(2));
  });
}

thrcnf_status thrcnf_construct(const char* method, unsigned n, unsigned t, unsigned k, const char* alpha,
                               const char* design_path, thrcnf_formula** out) {
  return guard([&] {
    using namespace thrcnf;
    require(method, "method");
    require(out, "out");
    auto need_design = [&] {
      if (!design_path || !*design_path) throw InputError(std::string(method) + " needs a design file");
      return read_set_system_file(design_path);
    };
    ConstructionResult r = [&]() -> ConstructionResult {
      switch (parse_method(method)) {
        case Method::SmallThreshold: return small_threshold_formula(n, t, k);
        case Method::FullWindow: return full_window_formula(n, k);
        case Method::Adaptive:
          if (!alpha || !*alpha) throw InputError("adaptive needs alpha");
          return adaptive_block_formula(n, Ratio::parse(alpha), k);
        case Method::Product: return block_product_formula(n, t, k);
        case Method::TwoCnfOptimal: return two_cnf_optimal(n, t);
        case Method::FromCover: return from_cover_design(need_design(), n, k);
        case Method::FromSteiner: return from_steiner(need_design(), n);
      }
      throw InputError("unknown method");
    }();
    Metadata meta = r.metadata();
    meta["k"] = std::to_string(r.formula.width());
    if (alpha && *alpha && r.method == Method::Adaptive) meta["alpha"] = Ratio::parse(alpha).str();
    *out = new thrcnf_formula{{std::move(r.formula), std::move(meta)}};
  });
}

thrcnf_status thrcnf_transform(const thrcnf_formula* in, const char* ops, unsigned t, unsigned k,
                               int check_invariants, thrcnf_formula** out, char** log_json) {
  return guard([&] {
    require(in, "formula");
    require(ops, "ops");
    require(out, "out");
    thrcnf::Formula f = in->file.formula;
    thrcnf::TransformLog log;
    std::stringstream ss(ops);
    std::string op;
    std::string applied;
    while (std::getline(ss, op, ',')) {
      if (op.empty()) continue;
      f = apply_op(op, f, t, k, check_invariants != 0, log);
      applied += (applied.empty() ? "" : ",") + op;
    }
    if (applied.empty()) throw thrcnf::InputError("no transform selected");
    thrcnf::Metadata meta = in->file.meta;
    meta.erase("claimed_count");
    meta.erase("method");
    meta["t"] = std::to_string(t);
    meta["transform"] = applied;
    if (log_json) {
      Json steps = Json::array();
      for (const auto& s : log)
        steps.push_back(
            {{"op", s.op}, {"detail", s.detail}, {"clauses", s.clauses_after}, {"nonmonotone", s.nonmonotone_after}});
      *log_json = dup(Json{{"schema", 1}, {"steps", steps}}.dump(2));
    }
    *out = new thrcnf_formula{{std::move(f), std::move(meta)}};
  });
}

thrcnf_status thrcnf_implication_graph(const thrcnf_formula* f, char** edges) {
  return guard([&] {
    require(f, "formula");
    require(edges, "edges");
    *edges = dup(thrcnf::ImplicationGraph(f->file.formula).edge_list());
  });
}

thrcnf_status thrcnf_conflict_graph(const thrcnf_formula* f, char** edges) {
  return guard([&] {
    require(f, "formula");
    require(edges, "edges");
    *edges = dup(thrcnf::conflict_graph(f->file.formula).edge_list());
  });
}

thrcnf_status thrcnf_count_mis(const thrcnf_formula* f, unsigned s, uint64_t* count) {
  return guard([&] {
    require(f, "formula");
    require(count, "count");
    *count = thrcnf::count_max_independent_sets(thrcnf::conflict_graph(f->file.formula), s);
  });
}

thrcnf_status thrcnf_search(const char* quantity, const char* params_json, const char* limits_json,
                            const char* witness_path, char** result_json) {
  return guard([&] {
    require(quantity, "quantity");
    require(params_json, "params");
    require(result_json, "result");
    const Json params = Json::parse(params_json);
    if (!params.is_object()) throw thrcnf::ParseError("params must be a JSON object", 0);
    const Json r = run_search(quantity, params, parse_limits(limits_json),
                              witness_path && *witness_path ? witness_path : nullptr);
    *result_json = dup(r.dump(2));
  });
}

thrcnf_status thrcnf_cover_build(const thrcnf_formula* base, unsigned n, unsigned t, unsigned k, const char* method,
                                 uint64_t seed, size_t count, size_t pool, unsigned threads, const char* out_dir,
                                 char** manifest_json) {
  return guard([&] {
    using namespace thrcnf;
    require(method, "method");
    require(manifest_json, "manifest");
    const ConstructionResult built = base ? ConstructionResult{base->file.formula, t, 0, Method::Product}
                                          : block_product_formula(n, t, k);
    const Formula& f = built.formula;
    if (f.num_vars() != n) throw InputError("base formula has " + std::to_string(f.num_vars()) + " variables, not n");
    if (f.max_clause_width() > k) throw InputError("base formula is wider than k");
    const BigInt s = base ? BigInt(count_weight_sat(f, t, std::max(1U, threads))) : built.claimed_count;
    if (s == 0) throw InputError("base formula has no weight-t solutions");
    const BigInt upper = cover_bounds(n, t, k, s, s).second;
    const unsigned th = std::max(1U, threads);
    Cover cover;
    switch (parse_cover_method(method)) {
      case CoverMethod::Random:
        cover = random_permutation_cover(f, t, count ? count : static_cast<std::size_t>(to_u64(upper)), seed, th);
        break;
      case CoverMethod::Greedy:
        cover = greedy_cover(f, t, pool ? pool : static_cast<std::size_t>(to_u64(upper)) * 4, seed, th);
        break;
    }
    cover.k = k;
    Json manifest;
    if (out_dir && *out_dir) {
      manifest = write_cover(cover, out_dir);
    } else {
      manifest = cover_manifest(cover, {});
    }
    manifest["size"] = cover.disjuncts.size();
    manifest["base_solutions"] = bigint_json(s);
    manifest["upper_bound"] = bigint_json(upper);
    if (cover.complete && n <= 20) manifest["equals_threshold"] = disjunction_equals_threshold(cover);
    *manifest_json = dup(manifest.dump(2));
  });
}

thrcnf_status thrcnf_bounds(unsigned n, unsigned t, unsigned k, const char* alpha, char** json) {
  return guard([&] {
    using namespace thrcnf;
    require(json, "json");
    if (t > n || k == 0) throw InputError("bounds need t <= n and k >= 1");
    const auto [lower, lsrc] = best_construction(n, t, k);
    const auto [upper, usrc] = best_upper_bound(n, t, k);
    const auto [flo, fup] = cover_bounds(n, t, k, upper, lower);
    Json j = {{"schema", 1},
              {"params", {{"n", n}, {"t", t}, {"k", k}}},
              {"s_lower", bigint_json(lower)},
              {"s_lower_source", lsrc},
              {"s_upper", bigint_json(upper)},
              {"s_upper_source", usrc},
              {"f_lower", bigint_json(flo)},
              {"f_upper", bigint_json(fup)}};
    if (alpha && *alpha) {
      const Ratio a = Ratio::parse(alpha);
      if ((static_cast<std::int64_t>(n) * a.num) % a.den == 0 && a.num > 0 && a.num < a.den) {
        const EntropyBounds e = entropy_bounds(n, a);
        j["entropy"] = {{"alpha", a.str()},
                        {"lower", static_cast<double>(e.lower)},
                        {"binomial", bigint_json(e.exact)},
                        {"upper", static_cast<double>(e.upper)},
                        {"holds", e.holds}};
      }
      try {
        const ConjectureRatio c = conjecture_ratio(n, a, k);
        j["conditional"] = {{"alpha", a.str()},
                            {"b", c.b},
                            {"ratio", c.ratio.str()},
                            {"bound", bigint_json(c.conditional_bound)},
                            {"exponent_log2", c.exponent}};
      } catch (const InputError& e) {
        j["conditional"] = {{"skipped", e.what()}};
      }
    }
    *json = dup(j.dump(2));
  });
}

thrcnf_status thrcnf_table(const char* ks, const char* ns, const char* t_rule, int constructions_only,
                           const char* limits_json, unsigned threads, const char* cert_dir, char** csv, char** json) {
  return guard([&] {
    using namespace thrcnf;
    require(ks, "ks");
    require(ns, "ns");
    TableGrid grid;
    grid.ks = parse_uint_list(ks);
    grid.ns = parse_uint_list(ns);
    grid.t_rule = t_rule && *t_rule ? t_rule : "all";
    TableOptions opts;
    opts.constructions_only = constructions_only != 0;
    opts.limits = parse_limits(limits_json);
    opts.threads = std::max(1U, threads);
    if (cert_dir) opts.cert_dir = cert_dir;
    const auto rows = build_table(grid, opts);
    if (csv) *csv = dup(table_csv(rows));
    if (json) *json = dup(table_json(rows).dump(2));
  });
}

thrcnf_status thrcnf_verify_theorems(int quick, unsigned threads, const int* only, size_t num_only, int mutate,
                                     uint64_t seed, thrcnf_criterion_cb cb, void* user, int* all_passed) {
  return guard([&] {
    require(all_passed, "all_passed");
    if (num_only) require(only, "only");
    thrcnf::HarnessOptions opts;
    opts.quick = quick != 0;
    opts.threads = std::max(1U, threads);
    opts.seed = seed;
    opts.only.assign(only, only + num_only);
    if (mutate) opts.mutate = mutate;
    const auto results = thrcnf::run_theorem_checks(opts, [&](const thrcnf::CriterionResult& r) {
      if (cb) cb(r.id, r.title.c_str(), r.passed ? 1 : 0, r.detail.c_str(), r.seconds, user);
    });
    *all_passed = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; }) ? 1 : 0;
  });
}

}  // extern "C"
