// One line per acceptance criterion. Exit status is the number of failures
// (capped), so ctest reports the run as failed when any criterion fails.
#include <cstdio>
#include <cstring>
#include <string>

#include "checks.hpp"

int main(int argc, char** argv) {
    std::string only;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = argv[++i];
    }
    int failed = 0, run = 0;
    for (const auto& spec : layerstab::cli::all_checks()) {
        if (!only.empty() && only != spec.id && only != spec.group && only != std::to_string(spec.criterion)) continue;
        const auto r = layerstab::cli::run_check(spec, {});
        ++run;
        failed += r.passed ? 0 : 1;
        std::printf("[%s] %2d %-20s %s (%.2f s)\n", r.passed ? "PASS" : "FAIL", r.criterion, r.id.c_str(),
                    r.detail.c_str(), r.seconds);
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", run - failed, run);
    return failed == 0 ? 0 : 1;
}
