#pragma once

// Acceptance checks: master-equation numerics against the blockade conditions,
// the figure regimes and the analytic oracles. Shared by `blockade check` and the
// acceptance test binary.

#include <functional>
#include <string>
#include <vector>

namespace blockade::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::vector<std::string> details;  // measured values, one finding per line
};

inline constexpr int kCriterionCount = 10;

std::string criterion_title(int id);

// Throws std::out_of_range for an id outside 1..kCriterionCount.
CriterionResult run_criterion(int id);

// All criteria in order; `on_result` (if set) is called as each one finishes.
std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace blockade::acceptance
