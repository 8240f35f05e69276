// End-to-end tests that drive the installed `det` binary through a shell,
// checking exact output bytes and exit codes. The binary path arrives in the
// DET_BIN environment variable (set by CTest).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include "golden.hpp"

#include "detkit/dodgson.hpp"

namespace {

int g_failures = 0;
int g_checks = 0;

struct RunResult {
    int code = -1;
    std::string out, err;
};

std::string slurp(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    file << content;
}

const char* bin_path() {
    static const char* bin = std::getenv("DET_BIN");
    if (!bin) {
        std::fprintf(stderr, "DET_BIN is not set; run through ctest\n");
        std::exit(99);
    }
    return bin;
}

// args is appended verbatim; prefix lets a test pipe data into stdin
RunResult run(const std::string& args, const std::string& prefix = "") {
    std::string cmd = prefix + "\"" + std::string(bin_path()) + "\" " + args +
                      " > cli_stdout.txt 2> cli_stderr.txt";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp("cli_stdout.txt");
    r.err = slurp("cli_stderr.txt");
    return r;
}

void expect(bool ok, const std::string& label, const std::string& detail = "") {
    ++g_checks;
    if (ok) return;
    ++g_failures;
    std::cout << "FAIL " << label << "\n";
    if (!detail.empty()) std::cout << detail << "\n";
}

void expect_eq(const std::string& got, const std::string& want, const std::string& label) {
    expect(got == want, label, "--- got ---\n" + got + "--- want ---\n" + want + "-----------");
}

std::string show(int v) { return std::to_string(v); }

} // namespace

int main() {
    write_file("cli_golden.txt", golden::kCondenseInput);
    write_file("cli_symbolic.txt", golden::kSymbolicInput);

    // plain value, no trace
    {
        RunResult r = run("eval --input cli_golden.txt");
        expect(r.code == 0, "eval exit code", "got " + show(r.code) + " stderr: " + r.err);
        expect_eq(r.out, "5\n", "eval value only");
    }

    // full condensation trace, exact bytes
    {
        RunResult r = run("eval --input cli_golden.txt --trace");
        std::string want = std::string(golden::kCondenseInput) + "=>\n" + golden::kCondenseStage1 +
                           "=>\n" + golden::kCondenseStage2 + "=>\n" + golden::kCondenseStage3 +
                           "=>\n" + "5\n";
        expect(r.code == 0, "trace exit code", "got " + show(r.code));
        expect_eq(r.out, want, "condensation trace bytes");
    }

    // fixed-pivot reduction trace with forced pivots, exact bytes
    {
        RunResult r = run("eval --input cli_golden.txt --method chio "
                          "--forced-pivots \"2,1;4,4;2,2\" --trace");
        std::string want = std::string(golden::kCondenseInput) + "# pivot (2,1) = -1\n" + "=>\n" +
                           golden::kChioStage1 + "# pivot (4,4) = 3\n" + "=>\n" +
                           golden::kChioStage2 + "# pivot (2,2) = 11\n" + "=>\n" +
                           golden::kChioStage3 + "=>\n" + "Z=-495 divisor=-99 value=5\n";
        expect(r.code == 0, "chio trace exit code", "got " + show(r.code) + " stderr: " + r.err);
        expect_eq(r.out, want, "chio trace bytes");
    }

    // symbolic entry, compact two-line report
    {
        RunResult r = run("eval --input cli_symbolic.txt --symbolic-entry 3,3");
        expect(r.code == 0, "symbolic exit code", "got " + show(r.code) + " stderr: " + r.err);
        expect_eq(r.out, "30 - 15*e\nvalue at e=1: 15\n", "symbolic report bytes");
    }

    // oracle methods agree and --trace degrades gracefully
    {
        RunResult r = run("eval --input cli_golden.txt --method laplace --trace");
        expect(r.code == 0, "laplace exit code", "got " + show(r.code));
        expect_eq(r.out, "# method laplace records no stages\n5\n", "laplace trace note");
        RunResult d = run("eval --input cli_golden.txt --method definition");
        expect_eq(d.out, "5\n", "definition value");
    }

    // --verify passes silently on a correct value
    {
        RunResult r = run("eval --input cli_golden.txt --verify");
        expect(r.code == 0, "verify exit code", "got " + show(r.code) + " stderr: " + r.err);
        expect_eq(r.out, "5\n", "verify output unchanged");
    }

    // stdin via --input -
    {
        RunResult r = run("eval --input -", "printf '1 2\\n3 4\\n' | ");
        expect(r.code == 0, "stdin exit code", "got " + show(r.code) + " stderr: " + r.err);
        expect_eq(r.out, "-2\n", "stdin value");
    }

    // inline --text
    {
        RunResult r = run("eval --text 5");
        expect_eq(r.out, "5\n", "inline text value");
    }

    // JSON: key order, content, and replayability of the recorded stages
    {
        RunResult r = run("eval --input cli_golden.txt --json");
        expect(r.code == 0, "json exit code", "got " + show(r.code) + " stderr: " + r.err);
        const char* keys[] = {"\"value\"",   "\"method\"",        "\"permutation_sign\"",
                              "\"stages\"",  "\"pivots\"",        "\"divisor\"",
                              "\"perturbations\"", "\"epsilon_polynomial\""};
        std::size_t pos = 0;
        bool ordered = true;
        for (const char* k : keys) {
            std::size_t at = r.out.find(k);
            if (at == std::string::npos || at < pos) {
                ordered = false;
                break;
            }
            pos = at;
        }
        expect(ordered, "json key order", r.out);

        nlohmann::json doc = nlohmann::json::parse(r.out);
        expect(doc["value"] == "5", "json value field");
        expect(doc["method"] == "dodgson", "json method field");
        expect(doc["permutation_sign"] == 1, "json sign field");
        expect(doc["divisor"] == "1", "json divisor field");
        expect(doc["pivots"].empty() && doc["perturbations"].empty(), "json empty arrays");
        expect(doc["epsilon_polynomial"].is_null(), "json null polynomial");

        // rebuild each stage and replay the reduction, proving the trace is
        // self-consistent rather than just pretty
        std::vector<detkit::RationalMatrix> stages;
        for (const auto& st : doc["stages"]) {
            std::vector<std::vector<detkit::BigRational>> rows;
            for (const auto& row : st) {
                rows.emplace_back();
                for (const auto& cell : row)
                    rows.back().push_back(detkit::BigRational::parse(cell.get<std::string>()));
            }
            stages.push_back(detkit::RationalMatrix::from_rows(rows));
        }
        expect(stages.size() == 5, "json stage count", show(static_cast<int>(stages.size())));
        bool replayed = stages.size() == 5;
        for (std::size_t k = 1; replayed && k < stages.size(); ++k)
            replayed = detkit::condense_once(stages[k - 1], k >= 2 ? &stages[k - 2] : nullptr) ==
                       stages[k];
        expect(replayed, "json stages replay");
    }

    // chio JSON carries pivots and the divisor
    {
        RunResult r = run("eval --input cli_golden.txt --json --method chio "
                          "--forced-pivots \"2,1;4,4;2,2\"");
        nlohmann::json doc = nlohmann::json::parse(r.out);
        expect(doc["method"] == "chio", "chio json method");
        expect(doc["divisor"] == "-99", "chio json divisor");
        expect(doc["pivots"].size() == 3, "chio json pivot count");
        expect(doc["pivots"][0]["r"] == 2 && doc["pivots"][0]["s"] == 1 &&
                   doc["pivots"][0]["value"] == "-1",
               "chio json first pivot");
    }

    // error paths: exit 1 with a message on stderr
    {
        RunResult r = run("eval --text \"1 x\"");
        expect(r.code == 1, "bad token exit code", "got " + show(r.code));
        expect(r.err.rfind("error:", 0) == 0, "bad token stderr prefix", r.err);

        r = run("eval --input does_not_exist.txt");
        expect(r.code == 1, "missing file exit code", "got " + show(r.code));

        r = run("eval");
        expect(r.code == 1, "no input exit code", "got " + show(r.code));

        r = run("eval --text 5 --forced-pivots \"1,1\"");
        expect(r.code == 1, "pivots wrong method exit code", "got " + show(r.code));

        r = run("eval --text 5 --symbolic-entry 1,1 --method chio");
        expect(r.code == 1, "symbolic wrong method exit code", "got " + show(r.code));

        write_file("cli_abort.txt", "1 1 1\n1 0 1\n1 1 2\n");
        r = run("eval --input cli_abort.txt --symbolic-entry 1,1");
        expect(r.code == 1, "symbolic abort exit code", "got " + show(r.code));
        expect(r.err.rfind("error:", 0) == 0, "symbolic abort stderr prefix", r.err);

        r = run("eval --text 5 --method gauss");
        expect(r.code != 0, "unknown method rejected", "got " + show(r.code));

        r = run("bench --orders 0..5 --out cli_bad.csv");
        expect(r.code == 1, "bad bench orders exit code", "got " + show(r.code));

        r = run("bench --orders 2..3");
        expect(r.code != 0, "bench without --out rejected", "got " + show(r.code));
    }

    // bench: CSV shape, summary shape, and determinism of everything but time
    {
        RunResult a = run("bench --orders 2..4 --samples 2 --seed 7 --out cli_bench1.csv");
        expect(a.code == 0, "bench exit code", "got " + show(a.code) + " stderr: " + a.err);
        expect(a.out.rfind("method        n       adds       subs       muls       divs\n", 0) == 0,
               "bench summary header", a.out);

        RunResult b = run("bench --orders 2..4 --samples 2 --seed 7 --out cli_bench2.csv");
        expect_eq(b.out, a.out, "bench summary determinism");

        auto strip_micros = [](const std::string& csv) {
            std::istringstream in(csv);
            std::string line, out;
            while (std::getline(in, line)) {
                auto cut = line.rfind(',');
                out += line.substr(0, cut);
                out += "\n";
            }
            return out;
        };
        std::string csv1 = slurp("cli_bench1.csv");
        std::string csv2 = slurp("cli_bench2.csv");
        expect(csv1.rfind("method,n,sample,adds,subs,muls,divs,fallback,micros\n", 0) == 0,
               "bench csv header", csv1.substr(0, 60));
        int rows = 0;
        for (char c : csv1)
            if (c == '\n') ++rows;
        expect(rows == 1 + 3 * 2 * 4, "bench csv row count", show(rows));
        expect_eq(strip_micros(csv2), strip_micros(csv1), "bench csv determinism");
    }

    // selftest: deterministic bytes, passing exit code
    {
        RunResult a = run("selftest --seed 42");
        expect(a.code == 0, "selftest exit code", "got " + show(a.code) + "\n" + a.out);
        RunResult b = run("selftest --seed 42");
        expect_eq(b.out, a.out, "selftest determinism");
        expect(a.out.rfind("selftest seed=42 sizes=2,3,4,5\n", 0) == 0, "selftest header",
               a.out.substr(0, 40));
        expect(a.out.find("FAIL") == std::string::npos, "selftest all green", a.out);
        expect(a.out.find(" suites passed\n") != std::string::npos, "selftest footer", a.out);
    }

    std::cout << (g_failures == 0 ? "cli_tests: all " + std::to_string(g_checks) + " checks passed\n"
                                  : "cli_tests: " + std::to_string(g_failures) + " of " +
                                        std::to_string(g_checks) + " checks FAILED\n");
    return g_failures == 0 ? 0 : 1;
}
