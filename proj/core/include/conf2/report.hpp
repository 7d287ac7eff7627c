#pragma once

#include "conf2/series.hpp"

#include <string>
#include <utility>
#include <vector>

namespace conf2 {

struct VerificationCheck {
    std::string label;
    Count expected;
    Count actual;
    bool pass = false;
};

/// Outcome of one verification suite. Mismatches are recorded rather than
/// thrown so callers can render every checked cell.
struct VerificationReport {
    std::string suite;
    std::vector<VerificationCheck> checks;

    bool passed() const {
        for (const auto& check : checks)
            if (!check.pass) return false;
        return true;
    }

    std::int64_t failure_count() const {
        std::int64_t failures = 0;
        for (const auto& check : checks)
            if (!check.pass) ++failures;
        return failures;
    }
};

inline void add_check(VerificationReport& report, std::string label, Count expected,
                      Count actual) {
    const bool pass = expected == actual;
    report.checks.push_back({std::move(label), std::move(expected), std::move(actual), pass});
}

}  // namespace conf2
