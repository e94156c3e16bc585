#pragma once

#include <string>
#include <vector>

namespace qsb {

struct SuiteResult {
    std::string name;
    bool pass = false;
    double slack = 0.0;  // max over checks of (lhs - allowed); negative = margin
    std::string note;
};

/// Runs every invariant suite at fixed small sizes. inject_fault is "" for a
/// normal run or "reference-query" to corrupt the reference walk inside the
/// no-query-invariance suite (exercises the checker, not production code).
std::vector<SuiteResult> run_selfcheck(const std::string& inject_fault);

}  // namespace qsb
