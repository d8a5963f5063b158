#pragma once

#include "formula/bigint.hpp"
#include "formula/formula.hpp"
#include "formula/set_system.hpp"
#include "twocnf/conflict_graph.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace thrcnf {

using Json = nlohmann::ordered_json;

enum class Quantity { S, SPlus, Turan, Cover, FUpper, FLower, MaxMis };
enum class BoundType { Exact, Lower, Upper };

std::string to_string(Quantity q);  // "S", "S_plus", "Turan", ...
std::string to_string(BoundType b);

using Witness = std::variant<std::monostate, Formula, SetSystem, ConflictGraph>;

struct Certificate {
  Quantity quantity = Quantity::SPlus;
  /// Ordered parameter list, e.g. {{"n", 8}, {"t", 4}, {"k", 3}}.
  std::vector<std::pair<std::string, long long>> params;
  BigInt value;
  BoundType bound_type = BoundType::Exact;
  Witness witness;
  std::optional<std::string> witness_file;
  /// Set only after the witness was re-checked independently of the search.
  bool verified = false;
  double elapsed_ms = 0;
  std::uint64_t nodes_explored = 0;
  /// For S_plus: true when S may exceed S_plus at these parameters (no
  /// oracle or known identity closes the gap).
  bool s_gap = false;
  std::vector<std::string> notes;

  long long param(const std::string& name) const;
};

/// {"schema": 1, "quantity", "params", "value", "bound_type", "witness_file",
///  "verified", "elapsed_ms", "nodes_explored", ...}. Values that fit in 64
/// bits are numbers, larger ones strings.
Json certificate_to_json(const Certificate& c);

/// Size limits for the exhaustive searches. Exceeding one raises RefusedError
/// unless `force` is set.
struct SearchLimits {
  unsigned splus_max_n_k2 = 16;
  unsigned splus_max_n_k3 = 12;
  unsigned splus_max_n_other = 10;
  unsigned set_cover_max_n = 8;
  unsigned oracle_max_slice = 22;
  unsigned mis_max_n = 6;
  /// Branch-and-bound node budget, 0 for none. Running out raises
  /// RefusedError even when `force` is set.
  std::uint64_t max_nodes = 0;
  bool force = false;
};

Json bigint_json(const BigInt& v);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace thrcnf
