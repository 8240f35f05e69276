#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "detkit/field.hpp"

namespace detkit {

struct BenchConfig {
    int order_lo = 2;
    int order_hi = 8;
    int samples = 10;
    int entry_lo = -9;
    int entry_hi = 9;
    std::uint64_t seed = 0;
    int threads = 1; // samples run in parallel when > 1 and OpenMP is available
};

struct BenchRecord {
    std::string method;
    int n = 0;
    int sample = 0;
    OpCounter ops;
    bool fallback = false; // a shift or perturbation repair fired (condensation only)
    long long micros = 0;
};

struct BenchOutput {
    std::vector<BenchRecord> records; // deterministic order: (n, sample, method)
    std::string summary;              // mean op counts per method/order; no timing data
};

// One shared matrix per (order, sample), evaluated by every method whose
// order cap admits it; all values are cross-checked for exact agreement.
BenchOutput run_bench(const BenchConfig& config);

std::string bench_csv(const std::vector<BenchRecord>& records);

} // namespace detkit
