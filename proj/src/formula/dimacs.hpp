#pragma once

#include "formula/formula.hpp"

#include <istream>
#include <map>
#include <string>

namespace thrcnf {

/// Construction metadata carried in "c thrcnf key=value" comment lines.
using Metadata = std::map<std::string, std::string>;

struct DimacsFile {
  Formula formula;
  Metadata meta;
};

/// Reads "p cnf <n> <m>" files. The declared width comes from the "k"
/// metadata entry when present, otherwise the widest clause. Throws
/// ParseError with the offending line number.
DimacsFile read_dimacs(std::istream& in);
DimacsFile read_dimacs_file(const std::string& path);
DimacsFile parse_dimacs(const std::string& text);

/// Canonical text: metadata comments (sorted by key), header, one clause per
/// line with literals in ascending variable order. Always records "k".
std::string write_dimacs(const Formula& f, const Metadata& meta = {});
void write_dimacs_file(const std::string& path, const Formula& f, const Metadata& meta = {});

}  // namespace thrcnf
