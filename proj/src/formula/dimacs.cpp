#include "formula/dimacs.hpp"

#include "formula/errors.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace thrcnf {

namespace {

bool parse_long(std::string_view tok, long long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

DimacsFile read_dimacs(std::istream& in) {
  Metadata meta;
  long long n = -1, m = -1;
  std::vector<Clause> clauses;
  std::vector<Literal> current;
  std::size_t clause_line = 0;
  std::size_t raw_clauses = 0;
  std::string line;
  std::size_t lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "c" || toks[0][0] == 'c') {
      if (toks.size() >= 2 && toks[0] == "c" && toks[1] == "thrcnf") {
        for (std::size_t i = 2; i < toks.size(); ++i) {
          const auto eq = toks[i].find('=');
          if (eq == std::string_view::npos) continue;
          meta[std::string(toks[i].substr(0, eq))] = std::string(toks[i].substr(eq + 1));
        }
      }
      continue;
    }
    if (toks[0] == "p") {
      if (n >= 0) throw ParseError("duplicate problem line", lineno);
      if (toks.size() != 4 || toks[1] != "cnf" || !parse_long(toks[2], n) || !parse_long(toks[3], m) || n < 1 ||
          m < 0)
        throw ParseError("expected 'p cnf <n> <m>' with n >= 1", lineno);
      continue;
    }
    if (n < 0) throw ParseError("clause before problem line", lineno);
    for (auto tok : toks) {
      long long v = 0;
      if (!parse_long(tok, v)) throw ParseError("not an integer literal: '" + std::string(tok) + "'", lineno);
      if (v == 0) {
        if (current.empty()) throw ParseError("empty clause", lineno);
        if (Clause::is_tautology(current)) throw ParseError("tautological clause", clause_line);
        clauses.push_back(Clause::from_literals(current));
        current.clear();
        ++raw_clauses;
        continue;
      }
      if (v > n || -v > n)
        throw ParseError("literal " + std::to_string(v) + " outside 1.." + std::to_string(n), lineno);
      if (current.empty()) clause_line = lineno;
      current.push_back(Literal{static_cast<std::int32_t>(v)});
    }
  }
  if (n < 0) throw ParseError("missing problem line", lineno);
  if (!current.empty()) throw ParseError("unterminated clause (missing 0)", clause_line);
  if (static_cast<long long>(raw_clauses) != m)
    throw ParseError("header declares " + std::to_string(m) + " clauses, found " + std::to_string(raw_clauses), 0);

  unsigned width = 0;
  for (const auto& c : clauses) width = std::max(width, static_cast<unsigned>(c.width()));
  if (auto it = meta.find("k"); it != meta.end()) {
    long long k = 0;
    if (!parse_long(it->second, k) || k < 1) throw ParseError("metadata k must be a positive integer", 0);
    if (static_cast<unsigned>(k) < width)
      throw ParseError("clause wider than declared k=" + it->second, 0);
    width = static_cast<unsigned>(k);
  }
  if (width == 0) width = 1;
  return DimacsFile{Formula(static_cast<unsigned>(n), width, std::move(clauses)), std::move(meta)};
}

DimacsFile read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_dimacs(in);
}

DimacsFile parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return read_dimacs(in);
}

std::string write_dimacs(const Formula& f, const Metadata& meta) {
  std::ostringstream out;
  Metadata all = meta;
  all["k"] = std::to_string(f.width());
  for (const auto& [key, value] : all) out << "c thrcnf " << key << '=' << value << '\n';
  out << "p cnf " << f.num_vars() << ' ' << f.size() << '\n';
  for (const auto& c : f.clauses()) {
    for (Literal l : c.literals()) out << l.code << ' ';
    out << "0\n";
  }
  return out.str();
}

void write_dimacs_file(const std::string& path, const Formula& f, const Metadata& meta) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << write_dimacs(f, meta);
}

}  // namespace thrcnf
