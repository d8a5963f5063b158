#pragma once

#include "formula/varset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thrcnf {

/// Family of subsets of [n]; kept sorted and deduplicated.
struct SetSystem {
  unsigned n = 0;
  std::vector<VarSet> sets;
  /// Optional design strength r carried by Steiner catalogue files.
  std::optional<unsigned> strength;

  SetSystem() = default;
  SetSystem(unsigned n, std::vector<VarSet> sets);

  /// Common cardinality, or nullopt when sizes differ or the family is empty.
  std::optional<unsigned> uniform_size() const;
  std::size_t size() const { return sets.size(); }
};

/// JSON: {"n": 13, "block_size": 4, "blocks": [[1,2,4,10], ...], "strength": 2}.
/// Throws ParseError on schema violations and InputError on out-of-range points.
SetSystem parse_set_system_json(const std::string& text);
SetSystem read_set_system_file(const std::string& path);
std::string set_system_to_json(const SetSystem& s);

/// Renders as "{1,2,5}".
std::string to_string(const VarSet& s);

/// Partition of [n] into consecutive blocks of size q: a Steiner (n, q, 1) design.
SetSystem partition_design(unsigned n, unsigned q);

/// The 13-point projective plane of order 3, a Steiner (13, 4, 2) design,
/// developed from the difference set {0, 1, 3, 9} mod 13.
SetSystem projective_plane_13();

}  // namespace thrcnf
