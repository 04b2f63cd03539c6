#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cyclequiv {

enum class VerifyLevel { Smoke, Full };

struct CheckResult {
    std::string id;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail; // failure explanation or summary counts
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Runs the cross-check suite.  Smoke covers the pinned Hom instance and the
// smallest flag; Full runs every check at full size, including the seeded
// randomized properties.
VerifyReport verify_suite(VerifyLevel level, std::uint64_t seed = 12345,
                          int threads = 1);

} // namespace cyclequiv
