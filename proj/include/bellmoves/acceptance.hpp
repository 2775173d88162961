#pragma once

// The twelve acceptance criteria, each a self-contained exact check with a
// time budget.

#include <string>
#include <vector>

#include <json.hpp>

namespace bellmoves {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double budget_seconds = 0;

    /// "[PASS] 3 Type D ... (0.12 s)"
    std::string line() const;
    nlohmann::json to_json() const;
};

int criterion_count();
std::string criterion_title(int id);

/// Runs criterion id (1-based). Exceptions thrown by the check become a
/// failing result whose detail is the message.
CriterionResult run_criterion(int id);

/// Runs the listed criteria on up to `threads` worker threads; results come
/// back in the order of `ids`.
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, unsigned threads = 1);

/// BELLMOVES_THREADS if set to a positive integer, else 1.
unsigned default_threads();

}  // namespace bellmoves
