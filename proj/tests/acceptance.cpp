// Acceptance gate: one line per criterion, exit 0 only if all pass.
#include <cstdio>

#include "torimod/verify.hpp"

int main() {
    bool all = true;
    for (int id = 1; id <= torimod::criteria_count; ++id) {
        torimod::CheckResult r = torimod::run_criterion(id);
        all = all && r.pass;
        std::printf("%s  criterion %2d  %-42s %s [%.1fs]\n", r.pass ? "PASS" : "FAIL",
                    r.id, r.name.c_str(), r.detail.c_str(), r.seconds);
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
