// Acceptance gate: runs every verification suite and prints one line per
// criterion.  Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>

#include "kepler/verify.hpp"

int main() {
    using clock = std::chrono::steady_clock;
    const char* descriptions[] = {
        "Gamma identities of the classification (1e-10 log-relative)",
        "Fischer-Fock exponential (1e-8) and per-degree (1e-10) identities",
        "binomial series vs product form (1e-8 at degree 30)",
        "exact dimension sums and the harmonic oracle (integer arithmetic)",
        "kernel coefficients: moment route vs spectral route (1e-10)",
        "moment formulas vs eigenvalue quadrature (1e-6 / 1e-4)",
        "large-argument 1F1 expansion: slopes <= -(k+0.7), collapse 1e-3",
        "large-weight 2F1 expansion: error halving, order-1 gain >= 5x",
        "rank-one distortion: b_0 = 1 exactly, kernel fit residual < 1e-3",
        "bounded distortion leading ratio -> 1 with O(1/nu) error",
        "Mittag-Leffler values (round-off) and asymptotics (1e-3)",
        "Pochhammer shift identity rows, held-out residual < 1e-10",
    };

    int criterion = 0;
    bool all_pass = true;
    auto started = clock::now();
    for (const auto& name : kepler::verify::suite_names()) {
        ++criterion;
        try {
            auto rep = kepler::verify::run_suite(name);
            int failed = 0;
            for (const auto& line : rep.lines)
                if (!line.pass) ++failed;
            std::printf("[%s] criterion %2d (%s): %zu checks, %d failed -- %s\n",
                        rep.pass ? "PASS" : "FAIL", criterion, name.c_str(),
                        rep.lines.size(), failed, descriptions[criterion - 1]);
            if (!rep.pass) {
                all_pass = false;
                for (const auto& line : rep.lines) {
                    if (!line.pass)
                        std::printf("       %s: measured %.6e, threshold %.6e\n",
                                    line.label.c_str(), line.measured, line.threshold);
                }
            }
        } catch (const std::exception& e) {
            all_pass = false;
            std::printf("[FAIL] criterion %2d (%s): exception: %s\n", criterion,
                        name.c_str(), e.what());
        }
        std::fflush(stdout);
    }
    double elapsed = std::chrono::duration<double>(clock::now() - started).count();
    std::printf("%s (%d criteria, %.1fs)\n", all_pass ? "ALL CRITERIA PASS" : "FAILURES",
                criterion, elapsed);
    return all_pass ? 0 : 1;
}
