#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace thrcnf {

struct TransformStep {
  std::string op;      // "acyclify", "monotonize2", "remove-redundant", ...
  std::string detail;  // human readable description of the rewrite
  std::size_t clauses_after = 0;
  std::size_t nonmonotone_after = 0;
};

using TransformLog = std::vector<TransformStep>;

}  // namespace thrcnf
