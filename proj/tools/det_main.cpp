#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "detkit/bench.hpp"
#include "detkit/oracle.hpp"
#include "detkit/render.hpp"
#include "detkit/selftest.hpp"

namespace {

using namespace detkit;

long parse_long(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        long v = std::stol(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw Error("cannot parse " + what + ": \"" + text + "\"");
    }
}

std::pair<int, int> parse_pair(const std::string& text, const std::string& what) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw Error(what + " must look like \"I,J\", got \"" + text + "\"");
    return {static_cast<int>(parse_long(text.substr(0, comma), what)),
            static_cast<int>(parse_long(text.substr(comma + 1), what))};
}

std::vector<std::pair<int, int>> parse_pivot_list(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ';'))
        if (!part.empty()) out.push_back(parse_pair(part, "forced pivot"));
    return out;
}

std::pair<int, int> parse_range(const std::string& text, const std::string& what) {
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw Error(what + " must look like \"A..B\", got \"" + text + "\"");
    return {static_cast<int>(parse_long(text.substr(0, dots), what)),
            static_cast<int>(parse_long(text.substr(dots + 2), what))};
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ','))
        if (!part.empty()) out.push_back(static_cast<int>(parse_long(part, what)));
    if (out.empty()) throw Error(what + " list is empty");
    return out;
}

std::string read_input(const std::string& path, const std::string& inline_text) {
    if (!inline_text.empty()) return inline_text;
    if (path.empty()) throw Error("no matrix given: use --input FILE (or -) or --text STRING");
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw Error("cannot read input file: " + path);
        buf << file.rdbuf();
    }
    return buf.str();
}

void cross_verify(const RationalMatrix& m, const BigRational& value) {
    if (m.order() > 7) return;
    BigRational expect = det_laplace(m);
    if (!(value == expect))
        throw ContractViolation("verification failed: got " + value.str() +
                                ", independent expansion gives " + expect.str());
}

struct EvalFlags {
    std::string input, text, method = "dodgson", policy = "max-magnitude";
    std::string forced, symbolic;
    bool trace = false, json = false, verify = false;
    std::uint64_t seed = 0;
};

int run_eval_command(const EvalFlags& f) {
    if (!f.forced.empty() && f.method != "chio")
        throw Error("--forced-pivots applies only to --method chio");
    if (!f.symbolic.empty() && f.method != "dodgson")
        throw Error("--symbolic-entry applies only to --method dodgson");

    RationalMatrix m = parse_matrix(read_input(f.input, f.text));
    EvalOutcome outcome;
    outcome.method = f.method;
    std::string text;

    if (f.method == "dodgson" && !f.symbolic.empty()) {
        auto [i, j] = parse_pair(f.symbolic, "--symbolic-entry");
        SymbolicResult r = condense_with_symbolic_entry(m, i, j);
        outcome.value = r.polynomial.eval_at(r.trace.perturbations.at(0).original);
        outcome.condensation = &r.trace;
        text = render_symbolic_text(r, f.trace);
        if (f.verify) cross_verify(m, outcome.value);
        std::cout << (f.json ? render_eval_json(outcome) : text);
        return 0;
    }
    if (f.method == "dodgson") {
        DodgsonResult r = dodgson_det(m, {.seed = f.seed});
        outcome.value = r.value;
        outcome.condensation = &r.trace;
        text = render_dodgson_text(r, f.trace);
        if (f.verify) cross_verify(m, outcome.value);
        std::cout << (f.json ? render_eval_json(outcome) : text);
        return 0;
    }
    if (f.method == "chio") {
        ChioOptions options;
        options.policy =
            f.policy == "first-nonzero" ? PivotPolicy::FirstNonzero : PivotPolicy::MaxMagnitude;
        options.forced_pivots = parse_pivot_list(f.forced);
        ChioResult r = chio_det(m, options);
        outcome.value = r.value;
        outcome.chio = &r.trace;
        text = render_chio_text(r, f.trace);
        if (f.verify) cross_verify(m, outcome.value);
        std::cout << (f.json ? render_eval_json(outcome) : text);
        return 0;
    }

    outcome.value = f.method == "laplace" ? det_laplace(m) : det_definition(m);
    if (f.verify) cross_verify(m, outcome.value);
    if (f.json) {
        std::cout << render_eval_json(outcome);
    } else {
        if (f.trace) std::cout << "# method " << f.method << " records no stages\n";
        std::cout << outcome.value.str() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact determinant evaluation by adjacent-minor condensation and fixed-pivot reduction"};
    app.require_subcommand(1);
    int rc = 0;

    EvalFlags ef;
    auto* eval = app.add_subcommand("eval", "evaluate one determinant");
    eval->add_option("--input", ef.input, "matrix file, or - for standard input");
    eval->add_option("--text", ef.text, "matrix given inline");
    eval->add_option("--method", ef.method, "dodgson | chio | laplace | definition")
        ->check(CLI::IsMember({"dodgson", "chio", "laplace", "definition"}));
    eval->add_flag("--trace", ef.trace, "print the step trace");
    eval->add_flag("--json", ef.json, "emit the JSON schema instead of text");
    eval->add_option("--pivot-policy", ef.policy, "max-magnitude | first-nonzero")
        ->check(CLI::IsMember({"max-magnitude", "first-nonzero"}));
    eval->add_option("--forced-pivots", ef.forced, "pivot list \"r,s;r,s;...\" (chio only)");
    eval->add_option("--symbolic-entry", ef.symbolic, "entry \"i,j\" to replace by e (dodgson only)");
    eval->add_option("--seed", ef.seed, "seed for perturbation coefficients");
    eval->add_flag("--verify", ef.verify, "cross-check against an independent expansion (n <= 7)");
    eval->callback([&] { rc = run_eval_command(ef); });

    std::string orders = "2..8", entry_range = "-9..9", out_path;
    int samples = 10, threads = 1;
    std::uint64_t bench_seed = 0;
    auto* bench = app.add_subcommand("bench", "count field operations across methods");
    bench->add_option("--orders", orders, "order range A..B (within 1..12)");
    bench->add_option("--samples", samples, "matrices per order");
    bench->add_option("--entry-range", entry_range, "integer entry range LO..HI");
    bench->add_option("--seed", bench_seed, "master seed");
    bench->add_option("--out", out_path, "CSV output path")->required();
    bench->add_option("--threads", threads, "parallel samples (needs OpenMP)");
    bench->callback([&] {
        BenchConfig config;
        std::tie(config.order_lo, config.order_hi) = parse_range(orders, "--orders");
        std::tie(config.entry_lo, config.entry_hi) = parse_range(entry_range, "--entry-range");
        config.samples = samples;
        config.seed = bench_seed;
        config.threads = threads;
        BenchOutput result = run_bench(config);
        std::ofstream file(out_path);
        if (!file) throw detkit::Error("cannot write output file: " + out_path);
        file << bench_csv(result.records);
        if (!file.good()) throw detkit::Error("failed writing output file: " + out_path);
        std::cout << result.summary;
    });

    std::uint64_t st_seed = 0;
    std::string st_sizes = "2,3,4,5";
    auto* selftest = app.add_subcommand("selftest", "run every property suite");
    selftest->add_option("--seed", st_seed, "seed for randomized suites");
    selftest->add_option("--sizes", st_sizes, "orders for the size-generic suites, e.g. 2,3,4");
    selftest->callback([&] {
        SelftestConfig config;
        config.seed = st_seed;
        config.sizes = parse_int_list(st_sizes, "--sizes");
        SelftestReport report = run_selftest(config);
        std::cout << report.text;
        if (!report.passed) rc = 3;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const detkit::ContractViolation& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return 2;
    } catch (const detkit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
