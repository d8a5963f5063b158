// thrcnf command-line front end. Talks to the library only through thrcnf.h.

#include <thrcnf/thrcnf.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

// Exit codes: 0 ok, 1 verification failure, 2 refused, 3 bad input, 4 internal.
int exit_code(thrcnf_status s) {
  switch (s) {
    case THRCNF_OK: return 0;
    case THRCNF_E_VERIFY: return 1;
    case THRCNF_E_REFUSED: return 2;
    case THRCNF_E_INPUT:
    case THRCNF_E_PARSE: return 3;
    default: return 4;
  }
}

struct Failure {
  int code;
};

void check(thrcnf_status s, const std::string& context = {}) {
  if (s == THRCNF_OK) return;
  std::cerr << "thrcnf: " << (context.empty() ? "" : context + ": ") << thrcnf_status_name(s) << ": "
            << thrcnf_last_error() << "\n";
  throw Failure{exit_code(s)};
}

struct StrDeleter {
  void operator()(char* p) const { thrcnf_string_free(p); }
};
using OwnedStr = std::unique_ptr<char, StrDeleter>;

struct FormulaDeleter {
  void operator()(thrcnf_formula* f) const { thrcnf_formula_free(f); }
};
using FormulaPtr = std::unique_ptr<thrcnf_formula, FormulaDeleter>;

std::string take(char* s) {
  OwnedStr owned(s);
  return s ? std::string(s) : std::string();
}

FormulaPtr load(const std::string& path) {
  thrcnf_formula* f = nullptr;
  check(thrcnf_formula_read(path.c_str(), &f), path);
  return FormulaPtr(f);
}

void save_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  out << text;
  if (!out) {
    std::cerr << "thrcnf: cannot write " << path << "\n";
    throw Failure{3};
  }
}

void save_formula(const thrcnf_formula* f, const std::string& path) {
  if (path.empty() || path == "-") {
    char* text = nullptr;
    check(thrcnf_formula_to_dimacs(f, &text));
    std::cout << take(text);
  } else {
    check(thrcnf_formula_write(f, path.c_str()), path);
  }
}

std::string meta(const thrcnf_formula* f, const char* key) {
  char* v = nullptr;
  check(thrcnf_formula_meta_get(f, key, &v));
  return take(v);
}

// Counts that fit in 64 bits print as numbers, larger ones as strings.
Json count_json(const std::string& digits) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(digits, &used);
    if (used == digits.size()) return v;
  } catch (const std::exception&) {
  }
  return digits;
}

std::string hash_of(const thrcnf_formula* f) {
  char* h = nullptr;
  check(thrcnf_formula_hash(f, &h));
  return take(h);
}

struct Limits {
  bool force = false;
  std::uint64_t max_nodes = 0;
  std::vector<std::string> overrides;

  void add_to(CLI::App* app) {
    app->add_flag("--force", force, "Run even when the size limits would refuse");
    app->add_option("--max-nodes", max_nodes, "Branch-and-bound node budget (0 = none)");
    app->add_option("--limit", overrides, "Override a size limit, e.g. splus_max_n_k3=13");
  }
  std::string json() const {
    Json j = Json::object();
    if (force) j["force"] = true;
    if (max_nodes) j["max_nodes"] = max_nodes;
    for (const auto& o : overrides) {
      const auto eq = o.find('=');
      if (eq == std::string::npos) throw CLI::ValidationError("--limit", "expected key=value, got " + o);
      j[o.substr(0, eq)] = std::stoul(o.substr(eq + 1));
    }
    return j.dump();
  }
};

void print_criterion(int id, const char* title, int passed, const char* detail, double seconds, void*) {
  std::printf("criterion %2d  %s  %-42s %8.2fs  %s\n", id, passed ? "PASS" : "FAIL", title, seconds, detail);
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Threshold-CNF toolkit: constructions, transforms, exact searches and covers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(thrcnf_version()));
  unsigned threads = thrcnf_default_threads();
  app.add_option("--threads", threads, "Worker threads (default: THRCNF_THREADS or available cores)")
      ->check(CLI::PositiveNumber);
  int rc = 0;

  // construct
  auto* construct = app.add_subcommand("construct", "Build a formula from a named construction");
  std::string method, alpha, design, out_path;
  unsigned n = 0, t = 0, k = 0;
  bool also_verify = false;
  construct->add_option("--method", method,
                        "small-threshold | full-window | adaptive | product | two-cnf-optimal | from-cover | "
                        "from-steiner")
      ->required();
  construct->add_option("--n", n, "Variables (block size b for full-window)");
  construct->add_option("--t", t, "Threshold");
  construct->add_option("--k", k, "Clause width");
  construct->add_option("--alpha", alpha, "Fraction p/q for the adaptive construction");
  construct->add_option("--design", design, "Set-system JSON for from-cover / from-steiner");
  construct->add_option("-o,--output", out_path, "Output DIMACS file (default stdout)");
  construct->add_flag("--verify", also_verify, "Re-check admissibility and the claimed count");
  construct->callback([&] {
    thrcnf_formula* raw = nullptr;
    check(thrcnf_construct(method.c_str(), n, t, k, alpha.empty() ? nullptr : alpha.c_str(),
                           design.empty() ? nullptr : design.c_str(), &raw));
    FormulaPtr f(raw);
    save_formula(f.get(), out_path);
    if (out_path.empty()) return;
    Json j = {{"file", out_path},
              {"method", meta(f.get(), "method")},
              {"n", thrcnf_formula_num_vars(f.get())},
              {"t", std::stoul(meta(f.get(), "t"))},
              {"k", thrcnf_formula_width(f.get())},
              {"clauses", thrcnf_formula_num_clauses(f.get())},
              {"claimed_count", count_json(meta(f.get(), "claimed_count"))},
              {"hash", hash_of(f.get())}};
    if (also_verify) {
      char* report = nullptr;
      check(thrcnf_formula_check(f.get(), static_cast<unsigned>(j["t"].get<unsigned long>()), threads, &report));
      const Json r = Json::parse(take(report));
      j["admissible"] = r["admissible"];
      j["count"] = r["count"];
      if (!r["admissible"].get<bool>() || !r.value("count_matches", false)) rc = 1;
    }
    std::cout << j.dump(2) << "\n";
  });

  // count
  auto* count = app.add_subcommand("count", "Count weight-t satisfying assignments");
  std::string in_path;
  count->add_option("--t", t, "Weight")->required();
  count->add_option("file", in_path, "DIMACS file")->required();
  count->callback([&] {
    FormulaPtr f = load(in_path);
    std::uint64_t c = 0;
    check(thrcnf_formula_count(f.get(), t, threads, &c));
    std::cout << c << "\n";
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Check t-admissibility and the recorded claimed count");
  bool as_json = false;
  verify->add_option("--t", t, "Threshold")->required();
  verify->add_option("file", in_path, "DIMACS file")->required();
  verify->add_flag("--json", as_json, "Print the full JSON report");
  verify->callback([&] {
    FormulaPtr f = load(in_path);
    char* report = nullptr;
    check(thrcnf_formula_check(f.get(), t, threads, &report));
    const Json r = Json::parse(take(report));
    if (as_json) {
      std::cout << r.dump(2) << "\n";
    } else {
      std::cout << "admissible=" << (r["admissible"].get<bool>() ? "true" : "false") << "\n";
      if (!r["witness"].is_null()) std::cout << "witness=" << r["witness"].get<std::string>() << "\n";
      std::cout << "count=" << r["count"] << "\n";
      if (r.contains("claimed_count"))
        std::cout << "claimed_count=" << r["claimed_count"].get<std::string>()
                  << "\ncount_matches=" << (r["count_matches"].get<bool>() ? "true" : "false") << "\n";
      std::cout << "hash=" << r["hash"].get<std::string>() << "\n";
    }
    if (!r["admissible"].get<bool>() || !r.value("count_matches", true)) rc = 1;
  });

  // transform
  auto* transform = app.add_subcommand("transform", "2-CNF rewrites: cycle removal and monotonisation");
  bool do_acyclify = false, do_monotonize = false, check_inv = false;
  std::string log_path, impl_graph_path, conflict_path;
  transform->add_flag("--acyclify", do_acyclify, "Remove implication cycles");
  transform->add_flag("--monotonize", do_monotonize, "Rewrite into a monotone 2-CNF (input must be acyclic)");
  transform->add_option("--t", t, "Threshold")->required();
  transform->add_option("file", in_path, "DIMACS file")->required();
  transform->add_option("-o,--output", out_path, "Output DIMACS file (default stdout)");
  transform->add_option("--log", log_path, "Write the JSON step log here");
  transform->add_option("--implication-graph", impl_graph_path, "Export the output's implication graph");
  transform->add_option("--conflict-graph", conflict_path, "Export the output's conflict graph (monotone output)");
  transform->add_flag("--check-invariants", check_inv, "Re-check termination measures after every step");
  transform->callback([&] {
    FormulaPtr in = load(in_path);
    std::string ops;
    if (do_acyclify) ops += "acyclify,";
    if (do_monotonize) ops += "monotonize2,";
    if (ops.empty()) throw CLI::ValidationError("transform", "select --acyclify and/or --monotonize");
    thrcnf_formula* raw = nullptr;
    char* log = nullptr;
    check(thrcnf_transform(in.get(), ops.c_str(), t, 0, check_inv, &raw, &log));
    FormulaPtr f(raw);
    const std::string log_text = take(log);
    save_formula(f.get(), out_path);
    if (!log_path.empty()) save_text(log_path, log_text + "\n");
    if (!impl_graph_path.empty()) {
      char* edges = nullptr;
      check(thrcnf_implication_graph(f.get(), &edges));
      save_text(impl_graph_path, take(edges));
    }
    if (!conflict_path.empty()) {
      char* edges = nullptr;
      check(thrcnf_conflict_graph(f.get(), &edges));
      save_text(conflict_path, take(edges));
    }
  });

  // normalize
  auto* normalize = app.add_subcommand("normalize", "Monotone, irredundant, width-k normal form");
  normalize->add_option("--t", t, "Threshold")->required();
  normalize->add_option("--k", k, "Clause width")->required();
  normalize->add_option("file", in_path, "DIMACS file")->required();
  normalize->add_option("-o,--output", out_path, "Output DIMACS file (default stdout)");
  normalize->add_option("--log", log_path, "Write the JSON step log here (default stderr)");
  normalize->add_flag("--check-invariants", check_inv, "Re-count solutions after every step");
  normalize->callback([&] {
    FormulaPtr in = load(in_path);
    thrcnf_formula* raw = nullptr;
    char* log = nullptr;
    check(thrcnf_transform(in.get(), "normalize", t, k, check_inv, &raw, &log));
    FormulaPtr f(raw);
    const std::string log_text = take(log);
    save_formula(f.get(), out_path);
    if (log_path.empty())
      std::cerr << log_text << "\n";
    else
      save_text(log_path, log_text + "\n");
  });

  // search
  auto* search = app.add_subcommand("search", "Exact searches emitting certificate JSON");
  search->require_subcommand(1);
  std::string witness_path, cert_path;
  unsigned q = 0, s = 0;
  Limits limits;
  auto run_search = [&](const char* quantity, const Json& params) {
    char* result = nullptr;
    check(thrcnf_search(quantity, params.dump().c_str(), limits.json().c_str(),
                        witness_path.empty() ? nullptr : witness_path.c_str(), &result));
    save_text(cert_path, take(result) + "\n");
  };
  auto add_search = [&](const char* name, const char* help, std::vector<std::pair<const char*, unsigned*>> params) {
    auto* sub = search->add_subcommand(name, help);
    for (auto [pname, target] : params) sub->add_option(std::string("--") + pname, *target)->required();
    sub->add_option("--witness", witness_path, "Write the witness to this file");
    sub->add_option("-o,--output", cert_path, "Write the certificate here (default stdout)");
    limits.add_to(sub);
    sub->callback([&, name, params] {
      Json p = Json::object();
      for (auto [pname, target] : params) p[pname] = *target;
      run_search(name, p);
    });
  };
  add_search("splus", "Exact monotone optimum S+(n,t,k)", {{"n", &n}, {"t", &t}, {"k", &k}});
  add_search("turan", "Turan number T(n,q,k)", {{"n", &n}, {"q", &q}, {"k", &k}});
  add_search("cover", "Covering number C(n,q,k)", {{"n", &n}, {"q", &q}, {"k", &k}});
  add_search("oracle", "Exact S(n,t,2) over all 2-CNFs", {{"n", &n}, {"t", &t}});
  add_search("mis", "Most size-s maximal independent sets over graphs on n vertices", {{"n", &n}, {"s", &s}});
  add_search("uniqueness", "Do all monotone optima contain t disjoint clauses?", {{"n", &n}, {"t", &t}, {"k", &k}});
  add_search("identity", "Turan / covering / S+ identity at threshold n-k", {{"n", &n}, {"k", &k}});

  // cover
  auto* cover = app.add_subcommand("cover", "Disjunction of permuted copies expressing THR_t");
  std::string cover_method = "random", base_path;
  std::uint64_t seed = 1;
  std::size_t pool = 0, copies = 0;
  cover->add_option("--n", n)->required();
  cover->add_option("--t", t)->required();
  cover->add_option("--k", k)->required();
  cover->add_option("--method", cover_method, "random | greedy")->check(CLI::IsMember({"random", "greedy"}));
  cover->add_option("--seed", seed, "SplitMix64 seed");
  cover->add_option("--pool", pool, "Greedy candidate pool size (0 = 4x the random bound)");
  cover->add_option("--count", copies, "Random cover size (0 = ceil(C(n,t) n / s))");
  cover->add_option("--base", base_path, "Base formula (default: best block-product construction)");
  cover->add_option("-o,--output", out_path, "Directory for disjunct files and manifest.json");
  cover->callback([&] {
    FormulaPtr base;
    if (!base_path.empty()) base = load(base_path);
    char* manifest = nullptr;
    check(thrcnf_cover_build(base.get(), n, t, k, cover_method.c_str(), seed, copies, pool, threads,
                             out_path.empty() ? nullptr : out_path.c_str(), &manifest));
    const Json m = Json::parse(take(manifest));
    std::cout << m.dump(2) << "\n";
    if (m.contains("equals_threshold") && !m["equals_threshold"].get<bool>()) rc = 1;
  });

  // table
  auto* table = app.add_subcommand("table", "Bound table over a parameter grid (CSV and JSON)");
  std::string ks = "2,3", ns = "1..8", t_rule = "all", csv_path, json_path, cert_dir;
  bool constructions_only = false;
  table->add_option("--k", ks, "Widths, e.g. 2,3 or 2..4");
  table->add_option("--n", ns, "Variable counts, e.g. 1..10");
  table->add_option("--t", t_rule, "Thresholds: all, n-c, or a list");
  table->add_flag("--constructions-only", constructions_only, "Skip exact searches");
  table->add_option("--csv", csv_path, "CSV output (default stdout)");
  table->add_option("--json", json_path, "JSON output");
  table->add_option("--cert-dir", cert_dir, "Directory for per-cell certificates");
  Limits table_limits;
  table_limits.add_to(table);
  table->callback([&] {
    char* csv = nullptr;
    char* json = nullptr;
    check(thrcnf_table(ks.c_str(), ns.c_str(), t_rule.c_str(), constructions_only, table_limits.json().c_str(),
                       threads, cert_dir.empty() ? nullptr : cert_dir.c_str(), &csv, &json));
    const std::string csv_text = take(csv), json_text = take(json);
    save_text(csv_path, csv_text);
    if (!json_path.empty()) save_text(json_path, json_text + "\n");
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Construction and counting bounds for S and F");
  bounds->add_option("--n", n)->required();
  bounds->add_option("--t", t)->required();
  bounds->add_option("--k", k)->required();
  bounds->add_option("--alpha", alpha, "Also report the entropy sandwich and the conditional ratio");
  bounds->callback([&] {
    char* json = nullptr;
    check(thrcnf_bounds(n, t, k, alpha.empty() ? nullptr : alpha.c_str(), &json));
    std::cout << take(json) << "\n";
  });

  // verify-theorems
  auto* theorems = app.add_subcommand("verify-theorems", "Run the acceptance checks and print a pass/fail matrix");
  bool quick = false;
  int mutate = 0;
  std::vector<int> only;
  std::uint64_t harness_seed = 20240611;
  theorems->add_flag("--quick", quick, "Reduced sweeps (under a minute)");
  theorems->add_option("--only", only, "Run only these criteria")->delimiter(',');
  theorems->add_option("--mutate", mutate, "Corrupt the construction checked by criterion 1, 2, 3 or 8");
  theorems->add_option("--seed", harness_seed, "Seed for the randomised criteria");
  theorems->callback([&] {
    int all_passed = 0;
    check(thrcnf_verify_theorems(quick, threads, only.data(), only.size(), mutate, harness_seed, print_criterion,
                                 nullptr, &all_passed));
    std::printf("%s\n", all_passed ? "all criteria passed" : "FAILED");
    if (!all_passed) rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "thrcnf: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
