// Acceptance gate: one line per criterion, PASS/FAIL (NOTE for the
// informational scope entry), nonzero exit if anything fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "tuza/verify.hpp"

int main() {
    using Runner = std::function<tuza::CriterionResult()>;
    const std::vector<Runner> runners = {
        [] { return tuza::criterion_table(); },
        [] { return tuza::criterion_zeta(); },
        [] { return tuza::criterion_survival(); },
        [] { return tuza::criterion_tree_equality(); },
        [] { return tuza::criterion_extremal(); },
        [] { return tuza::criterion_cover_validity(); },
        [] { return tuza::criterion_density_targets(); },
        [] { return tuza::criterion_analytic_checks(); },
        [] { return tuza::criterion_window_identity(); },
        [] { return tuza::criterion_scope_note(); },
    };
    bool all_ok = true;
    for (const auto& run : runners) {
        auto t0 = std::chrono::steady_clock::now();
        tuza::CriterionResult c = run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const char* tag = c.informational ? "NOTE" : (c.passed ? "PASS" : "FAIL");
        std::printf("%s criterion %d: %s — %s [%.1fs]\n", tag, c.id, c.name.c_str(),
                    c.detail.c_str(), secs);
        std::fflush(stdout);
        if (!c.informational && !c.passed) all_ok = false;
    }
    return all_ok ? 0 : 1;
}
