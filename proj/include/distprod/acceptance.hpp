#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace distprod::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::vector<CriterionResult> criteria;
    bool all_pass = false;
};

/// Runs the full acceptance suite. Every tolerance is pinned in the
/// implementation; `out`, when non-null, receives one pass/fail line per
/// criterion as it completes.
SuiteResult run_suite(std::ostream* out, int workers = 1);

}  // namespace distprod::acceptance
