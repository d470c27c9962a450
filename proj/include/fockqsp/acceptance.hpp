#pragma once

#include <string>
#include <vector>

namespace fockqsp {

/// One verification stage of the end-to-end suite.
struct AcceptanceResult {
    int number;
    bool pass;
    double seconds;
    std::string line;  // "[criterion N] PASS/FAIL - ..." with timing
};

int acceptance_criteria_count();

/// Runs one criterion (1-based) with its time budget enforced.
AcceptanceResult run_acceptance_criterion(int number);

/// Runs all criteria, or a single one when only != 0, printing each
/// line as it completes. Returns true iff everything passed.
bool run_acceptance(int only = 0);

}  // namespace fockqsp
