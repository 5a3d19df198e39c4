#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kforms/randomgen.hpp"

namespace kforms {

// One identity, checked over a batch of seeded random instances. detail
// carries the first counterexample (instance index plus rendered sides).
struct CheckResult {
    std::string name;
    unsigned instances = 0;
    bool passed = true;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::vector<CheckResult> checks;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::string profile;
    bool passed = true;
    std::vector<SuiteResult> suites;
};

// Suite names accepted by run_verify, in report order; "all" runs every one.
const std::vector<std::string>& suite_names();

// Deterministic in (suite, seed, profile): each check instance draws from its
// own derived stream, so reports are byte-identical across runs.
// Throws UsageError for an unknown suite name.
VerifyReport run_verify(const std::string& suite, std::uint64_t seed,
                        const Profile& profile);

std::string report_text(const VerifyReport& r);
std::string report_json(const VerifyReport& r);

} // namespace kforms
