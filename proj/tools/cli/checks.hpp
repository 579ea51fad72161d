#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace layerstab::cli {

struct CheckOptions {
    /// Relative error injected into d_v0 on the closed-form side of the
    /// second-variation check (0 = none). Used to confirm the check can fail.
    double dv0_skew = 0.0;
    std::uint64_t seed = 20240611;
};

struct CheckResult {
    int criterion = 0;
    std::string id;
    std::string group;
    bool passed = false;
    double achieved = 0.0;
    double tolerance = 0.0;
    std::string detail;
    double seconds = 0.0;
};

using CheckFn = CheckResult (*)(const CheckOptions&);

struct CheckSpec {
    int criterion;
    const char* id;
    const char* group;
    CheckFn fn;
    bool in_verify;  ///< part of the default oracle-vs-closed-form campaign
};

/// The fourteen acceptance checks in criterion order.
const std::vector<CheckSpec>& all_checks();

/// Runs one check, timing it and converting exceptions into a failure.
CheckResult run_check(const CheckSpec& spec, const CheckOptions& opts);

std::vector<std::string> check_groups();

}  // namespace layerstab::cli
