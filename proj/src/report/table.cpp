#include "report/table.hpp"

#include "construct/constructions.hpp"
#include "cover/cover.hpp"
#include "formula/errors.hpp"
#include "search/splus.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace thrcnf {

std::vector<unsigned> parse_uint_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw InputError("bad number '" + s + "' in list '" + text + "'");
    return static_cast<unsigned>(v);
  };
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(num(item));
    } else {
      const unsigned lo = num(item.substr(0, dots)), hi = num(item.substr(dots + 2));
      if (lo > hi) throw InputError("empty range '" + item + "' in list '" + text + "'");
      for (unsigned v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<unsigned> TableGrid::ts(unsigned n) const {
  std::vector<unsigned> out;
  if (t_rule == "all") {
    for (unsigned t = 0; t <= n; ++t) out.push_back(t);
  } else if (t_rule.rfind("n-", 0) == 0) {
    const unsigned c = parse_uint_list(t_rule.substr(2)).at(0);
    if (c <= n) out.push_back(n - c);
  } else {
    for (unsigned t : parse_uint_list(t_rule))
      if (t <= n) out.push_back(t);
  }
  return out;
}

std::pair<BigInt, std::string> best_construction(unsigned n, unsigned t, unsigned k) {
  if (t > n || k == 0) throw InputError("best_construction needs t <= n and k >= 1");
  BigInt value = block_product_plan(n, t, k).value;
  std::vector<std::pair<BigInt, std::string>> named;
  if (k * t <= n) named.emplace_back(ipow(BigInt(k), t), "small-threshold");
  if (t + k == n + 1) named.emplace_back(binomial(n, k - 1), "full-window");
  if (k >= 2) {
    if (t == n) {
      named.emplace_back(1, "two-cnf-optimal");
    } else {
      const unsigned s = n - t, q = n / s, r = n - s * q;
      named.emplace_back(ipow(BigInt(q), s - r) * ipow(BigInt(q + 1), r), "two-cnf-optimal");
    }
  }
  for (unsigned b = std::max(k, 1U); b <= n; ++b)
    if (n % b == 0 && k >= 2 && (b - k + 1) * (n / b) == t)
      named.emplace_back(ipow(binomial(b, k - 1), n / b), "adaptive");
  // Catalogued Steiner designs: partitions (n, q, 1) and the 13-point plane.
  if (t == 2 && k < n && (n - k) > 2 && n % (n - k) == 0 && n > k + t)
    named.emplace_back(BigInt(k) * n / 2, "from-steiner");
  if (n == 13 && t == 3 && k == 9) named.emplace_back(BigInt(234), "from-steiner");
  std::string source = "block-product";
  for (const auto& [v, tag] : named)
    if (v > value) value = v;
  for (const auto& [v, tag] : named)
    if (v == value) {
      source = tag;
      break;
    }
  return {value, source};
}

std::pair<BigInt, std::string> best_upper_bound(unsigned n, unsigned t, unsigned k) {
  std::pair<BigInt, std::string> best{binomial(n, t), "binomial"};
  const BigInt power = ipow(BigInt(k), t);
  if (power < best.first) best = {power, "power"};
  if (t >= 1) {
    const BigInt dc = BigInt(k) * binomial(n, t - 1) / t;
    if (dc < best.first) best = {dc, "double-counting"};
  }
  return best;
}

namespace {

TableRow build_row(unsigned n, unsigned t, unsigned k, const TableOptions& opts) {
  TableRow row;
  row.n = n;
  row.t = t;
  row.k = k;
  std::tie(row.best_lower, row.lower_source) = best_construction(n, t, k);
  std::tie(row.best_upper, row.upper_source) = best_upper_bound(n, t, k);
  row.s_gap = !s_equals_s_plus_known(n, t, k);
  if (opts.constructions_only) {
    row.exact_status = "skipped";
  } else {
    try {
      const Certificate cert = exact_monotone_S(n, t, k, opts.limits);
      row.exact = cert.value;
      row.exact_status = "exact";
      if (!opts.cert_dir.empty()) {
        std::filesystem::create_directories(opts.cert_dir);
        const std::string name =
            "splus_n" + std::to_string(n) + "_t" + std::to_string(t) + "_k" + std::to_string(k) + ".json";
        std::ofstream out(std::filesystem::path(opts.cert_dir) / name);
        out << certificate_to_json(cert).dump(2) << "\n";
        row.cert_file = name;
      }
    } catch (const RefusedError& e) {
      row.exact_status = std::string("refused: ") + e.what();
    }
  }
  if (row.exact && (*row.exact < row.best_lower || *row.exact > row.best_upper))
    throw VerificationError("table cell (" + std::to_string(n) + "," + std::to_string(t) + "," + std::to_string(k) +
                            "): exact value " + row.exact->str() + " outside [" + row.best_lower.str() + ", " +
                            row.best_upper.str() + "]");
  const BigInt s_for_lower = row.exact && !row.s_gap ? *row.exact : row.best_upper;
  const BigInt s_plus = row.exact ? *row.exact : row.best_lower;
  std::tie(row.f_lower, row.f_upper) = cover_bounds(n, t, k, s_for_lower, s_plus);
  return row;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<TableRow> build_table(const TableGrid& grid, const TableOptions& opts) {
  std::vector<std::tuple<unsigned, unsigned, unsigned>> cells;
  for (unsigned k : grid.ks)
    for (unsigned n : grid.ns)
      for (unsigned t : grid.ts(n)) cells.emplace_back(n, t, k);
  std::vector<std::optional<TableRow>> rows(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cells.size();) {
      try {
        const auto [n, t, k] = cells[i];
        rows[i] = build_row(n, t, k, opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(opts.threads, static_cast<unsigned>(cells.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::vector<TableRow> out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*rows[i]));
  }
  return out;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::string out =
      "n,t,k,s_lower,s_lower_source,s_upper,s_upper_source,s_plus_exact,exact_status,s_gap,f_lower,f_upper\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.t) + "," + std::to_string(r.k) + "," + r.best_lower.str() +
           "," + r.lower_source + "," + r.best_upper.str() + "," + r.upper_source + "," +
           (r.exact ? r.exact->str() : "") + "," + csv_field(r.exact_status) + "," + (r.s_gap ? "1" : "0") + "," +
           r.f_lower.str() + "," + r.f_upper.str() + "\n";
  }
  return out;
}

Json table_json(const std::vector<TableRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json j = {{"n", r.n},
              {"t", r.t},
              {"k", r.k},
              {"s_lower", bigint_json(r.best_lower)},
              {"s_lower_source", r.lower_source},
              {"s_upper", bigint_json(r.best_upper)},
              {"s_upper_source", r.upper_source},
              {"s_plus_exact", r.exact ? bigint_json(*r.exact) : Json(nullptr)},
              {"exact_status", r.exact_status},
              {"s_gap", r.s_gap},
              {"f_lower", bigint_json(r.f_lower)},
              {"f_upper", bigint_json(r.f_upper)}};
    if (r.cert_file) j["certificate"] = *r.cert_file;
    arr.push_back(j);
  }
  return Json{{"schema", 1}, {"rows", arr}};
}

}  // namespace thrcnf
