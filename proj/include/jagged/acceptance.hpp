#pragma once

#include <string>
#include <vector>

namespace jagged {

struct CriterionResult {
    int id;
    std::string title;
    bool passed;
    std::string detail;
    double seconds;
    double budget_seconds;  // 0 when the criterion sets no time limit
};

// Runs the acceptance criteria in order; each result includes its timing.
std::vector<CriterionResult> run_acceptance();
CriterionResult run_criterion(int id);
inline constexpr int kCriterionCount = 11;

}  // namespace jagged
