#include "detkit/bench.hpp"

#include <chrono>
#include <cstdio>
#include <map>

#include "detkit/chio.hpp"
#include "detkit/dodgson.hpp"
#include "detkit/oracle.hpp"
#include "detkit/random_matrix.hpp"

namespace detkit {
namespace {

constexpr int kCondensationCap = 12;
constexpr int kChioCap = 12;
constexpr int kLaplaceCap = 9;
constexpr int kDefinitionCap = 8;

struct MethodValue {
    BigRational value;
    BenchRecord record;
};

long long elapsed_micros(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

std::vector<MethodValue> run_task(const BenchConfig& config, int n, int sample) {
    Rng gen(split_seed(config.seed, static_cast<std::uint64_t>(n) * 10000 +
                                        static_cast<std::uint64_t>(sample)));
    RationalMatrix m = random_int_matrix(n, config.entry_lo, config.entry_hi, gen);
    std::uint64_t repair_seed = gen();

    std::vector<MethodValue> out;
    auto add = [&](const std::string& method, const BigRational& value, const OpCounter& ops,
                   bool fallback, long long micros) {
        BenchRecord rec;
        rec.method = method;
        rec.n = n;
        rec.sample = sample;
        rec.ops = ops;
        rec.fallback = fallback;
        rec.micros = micros;
        out.push_back({value, std::move(rec)});
    };

    if (n <= kCondensationCap) {
        OpCounter counter;
        auto start = std::chrono::steady_clock::now();
        DodgsonResult r = dodgson_det(m, {.seed = repair_seed, .counter = &counter});
        long long us = elapsed_micros(start);
        bool fallback = !r.trace.shifts_applied.empty() || !r.trace.perturbations.empty();
        add("dodgson", r.value, counter, fallback, us);
    }
    if (n <= kChioCap) {
        OpCounter counter;
        auto start = std::chrono::steady_clock::now();
        ChioResult r = chio_det(m, {.counter = &counter});
        add("chio", r.value, counter, false, elapsed_micros(start));
    }
    if (n <= kLaplaceCap) {
        OpCounter counter;
        FieldOps<BigRational> ops(&counter);
        auto start = std::chrono::steady_clock::now();
        BigRational v = det_laplace(m, ops);
        add("laplace", v, counter, false, elapsed_micros(start));
    }
    if (n <= kDefinitionCap) {
        OpCounter counter;
        FieldOps<BigRational> ops(&counter);
        auto start = std::chrono::steady_clock::now();
        BigRational v = det_definition(m, ops);
        add("definition", v, counter, false, elapsed_micros(start));
    }

    for (std::size_t k = 1; k < out.size(); ++k)
        if (!(out[k].value == out[0].value))
            throw ContractViolation("benchmark disagreement at n=" + std::to_string(n) +
                                    " sample=" + std::to_string(sample) + ": " +
                                    out[0].record.method + "=" + out[0].value.str() + " vs " +
                                    out[k].record.method + "=" + out[k].value.str());
    return out;
}

std::string format_summary(const std::vector<BenchRecord>& records) {
    struct Agg {
        std::uint64_t adds = 0, subs = 0, muls = 0, divs = 0, count = 0;
    };
    // method rank keeps the summary in the same order as the records
    std::map<std::pair<int, int>, Agg> groups; // (method rank, n) -> totals
    auto rank = [](const std::string& m) {
        if (m == "dodgson") return 0;
        if (m == "chio") return 1;
        if (m == "laplace") return 2;
        return 3;
    };
    const char* names[] = {"dodgson", "chio", "laplace", "definition"};
    for (const auto& r : records) {
        Agg& a = groups[{rank(r.method), r.n}];
        a.adds += r.ops.adds;
        a.subs += r.ops.subs;
        a.muls += r.ops.muls;
        a.divs += r.ops.divs;
        ++a.count;
    }
    std::string out = "method        n       adds       subs       muls       divs\n";
    char line[160];
    for (const auto& [key, a] : groups) {
        double c = static_cast<double>(a.count);
        std::snprintf(line, sizeof(line), "%-11s %3d %10.1f %10.1f %10.1f %10.1f\n",
                      names[key.first], key.second, a.adds / c, a.subs / c, a.muls / c,
                      a.divs / c);
        out += line;
    }
    return out;
}

} // namespace

BenchOutput run_bench(const BenchConfig& config) {
    if (config.order_lo < 1 || config.order_hi > 12 || config.order_lo > config.order_hi)
        throw Error("orders must satisfy 1 <= lo <= hi <= 12");
    if (config.samples < 1) throw Error("samples must be positive");
    if (config.entry_lo > config.entry_hi) throw Error("entry range is empty");

    std::vector<std::pair<int, int>> tasks;
    for (int n = config.order_lo; n <= config.order_hi; ++n)
        for (int sample = 0; sample < config.samples; ++sample) tasks.emplace_back(n, sample);

    std::vector<std::vector<MethodValue>> slots(tasks.size());
    std::exception_ptr failure = nullptr;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(config.threads > 0 ? config.threads : 1) \
    if (config.threads > 1)
#endif
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        try {
            slots[t] = run_task(config, tasks[t].first, tasks[t].second);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    BenchOutput out;
    for (auto& slot : slots)
        for (auto& mv : slot) out.records.push_back(std::move(mv.record));
    out.summary = format_summary(out.records);
    return out;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::string out = "method,n,sample,adds,subs,muls,divs,fallback,micros\n";
    for (const auto& r : records)
        out += r.method + "," + std::to_string(r.n) + "," + std::to_string(r.sample) + "," +
               std::to_string(r.ops.adds) + "," + std::to_string(r.ops.subs) + "," +
               std::to_string(r.ops.muls) + "," + std::to_string(r.ops.divs) + "," +
               (r.fallback ? "1" : "0") + "," + std::to_string(r.micros) + "\n";
    return out;
}

} // namespace detkit
