#pragma once

#include <string>
#include <vector>

namespace octoclif {

/// Internal checks are mathematically forced identities (ring axioms, table
/// closure, truncated inverses, round trips): a failure means the library is
/// broken and the process exits nonzero. Fixture checks compare derivation
/// against printed material; disagreements there are findings, reported but
/// never fatal.
enum class CheckCategory { internal, fixture };

struct CheckResult {
    std::string id;
    std::string label; // printed-source location, e.g. "Eq.13/U_L1*"
    CheckCategory category = CheckCategory::internal;
    bool agreed = true; // all granular comparisons came out equal
    int checks_run = 0;
    int checks_passed = 0;
    std::vector<std::string> details; // one line per discrepancy or finding
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    int internal_failures() const;
    int total_run() const;
    int total_passed() const;
    bool ok() const { return internal_failures() == 0; }
};

const std::vector<std::string> &suite_names(); // table1, eq8, bridge, clifford, eq16, rotation, all

SuiteResult run_suite(const std::string &name);

} // namespace octoclif
