#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace detkit {

struct SelftestConfig {
    std::uint64_t seed = 0;
    std::vector<int> sizes = {2, 3, 4, 5}; // orders used by the size-generic suites
};

struct SelftestReport {
    std::string text;   // full report; deterministic for a given config
    bool passed = true;
};

// Runs every property suite across the library. No timing data appears in
// the report, so identical config means identical bytes.
SelftestReport run_selftest(const SelftestConfig& config = {});

} // namespace detkit
