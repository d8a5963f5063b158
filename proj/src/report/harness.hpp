#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace thrcnf {

struct HarnessOptions {
  /// Smaller sweeps and sample counts; the whole run stays under a minute.
  bool quick = false;
  unsigned threads = 1;
  std::uint64_t seed = 20240611;
  /// Criteria to run; empty means all.
  std::vector<int> only;
  /// Deliberately corrupt the constructions checked by this criterion (1, 2,
  /// 3 or 8) to confirm the harness notices.
  std::optional<int> mutate;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Ids of the criteria the harness knows (1..11).
std::vector<int> harness_criteria();
std::string criterion_title(int id);

CriterionResult run_criterion(int id, const HarnessOptions& opts);

/// Runs the selected criteria in order, reporting each through `on_result`.
std::vector<CriterionResult> run_theorem_checks(const HarnessOptions& opts,
                                                const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace thrcnf
