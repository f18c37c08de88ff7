#ifndef TORIMOD_VERIFY_HPP
#define TORIMOD_VERIFY_HPP

#include <string>
#include <vector>

namespace torimod {

// One acceptance check. detail carries reported constants or the first
// counterexample; seconds is wall-clock time of the check.
struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

constexpr int criteria_count = 15;

// Runs acceptance criterion id (1-based). Throws Error on unknown id.
CheckResult run_criterion(int id);

std::vector<CheckResult> run_all_criteria();

}  // namespace torimod

#endif
