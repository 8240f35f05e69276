#include "detkit/selftest.hpp"

#include <functional>

#include "detkit/chio.hpp"
#include "detkit/dodgson.hpp"
#include "detkit/oracle.hpp"
#include "detkit/random_matrix.hpp"

namespace detkit {
namespace {

// One suite's tally. The first failed check wins the detail slot; later
// checks still run so the count stays meaningful.
class Suite {
public:
    void check(bool cond, const std::string& what) {
        ++checks_;
        if (!cond && ok_) {
            ok_ = false;
            detail_ = what;
        }
    }
    int checks() const { return checks_; }
    bool ok() const { return ok_; }
    const std::string& detail() const { return detail_; }

private:
    int checks_ = 0;
    bool ok_ = true;
    std::string detail_;
};

BigRational random_rational(Rng& rng) {
    return BigRational(BigRational::integer(int_in(rng, -50, 50)),
                       BigRational::integer(int_in(rng, 1, 20)));
}

EpsPolynomial random_poly(Rng& rng, int max_degree) {
    std::vector<BigRational> coeffs;
    int deg = int_in(rng, 0, max_degree);
    for (int k = 0; k <= deg; ++k) coeffs.emplace_back(int_in(rng, -9, 9));
    return EpsPolynomial(std::move(coeffs));
}

EpsPolynomial nonzero_poly(Rng& rng, int max_degree) {
    for (;;) {
        EpsPolynomial p = random_poly(rng, max_degree);
        if (!p.is_zero()) return p;
    }
}

std::vector<int> sizes_in(const std::vector<int>& sizes, int lo, int hi) {
    std::vector<int> out;
    for (int n : sizes)
        if (n >= lo && n <= hi) out.push_back(n);
    return out;
}

std::string at(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void suite_rational_axioms(Suite& s, Rng& rng) {
    for (int t = 0; t < 50; ++t) {
        BigRational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        s.check(a + b == b + a, "addition commutes");
        s.check((a + b) + c == a + (b + c), "addition associates");
        s.check(a * b == b * a, "multiplication commutes");
        s.check((a * b) * c == a * (b * c), "multiplication associates");
        s.check(a * (b + c) == a * b + a * c, "multiplication distributes");
        s.check((a - a).is_zero(), "additive inverse");
        if (!b.is_zero()) s.check((a / b) * b == a, "division round-trips");
    }
}

void suite_rational_parse(Suite& s, Rng& rng) {
    s.check(BigRational::parse("-4/8").str() == "-1/2", "-4/8 canonicalizes to -1/2");
    s.check(BigRational::parse("4/2").str() == "2", "4/2 canonicalizes to 2");
    s.check(BigRational::parse("0/7").str() == "0", "0/7 is 0");
    s.check(BigRational::parse("+3").str() == "3", "+3 parses");
    s.check(BigRational::parse("007").str() == "7", "leading zeros parse");
    s.check(BigRational::parse("7/1").str() == "7", "never prints /1");
    for (const char* bad : {"", "a", "1.5", "1/2/3", "2/-3", "-", "1/", "/2"}) {
        bool threw = false;
        try {
            BigRational::parse(bad);
        } catch (const BadToken&) {
            threw = true;
        }
        s.check(threw, std::string("BadToken for \"") + bad + "\"");
    }
    bool zero_den = false;
    try {
        BigRational::parse("3/0");
    } catch (const ZeroDenominator&) {
        zero_den = true;
    }
    s.check(zero_den, "ZeroDenominator for 3/0");
    for (int t = 0; t < 50; ++t) {
        BigRational r = random_rational(rng);
        s.check(BigRational::parse(r.str()) == r, "round-trip " + r.str());
    }
}

void suite_poly_arithmetic(Suite& s, Rng& rng) {
    for (int t = 0; t < 30; ++t) {
        EpsPolynomial a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 4);
        s.check(a + b == b + a, "poly addition commutes");
        s.check(a * b == b * a, "poly multiplication commutes");
        s.check(a * (b + c) == a * b + a * c, "poly multiplication distributes");
        s.check((a - a).is_zero(), "poly subtraction cancels");
        EpsPolynomial d = nonzero_poly(rng, 3);
        auto [q, r] = a.divmod(d);
        s.check(q * d + r == a, "divmod reconstructs");
        s.check(r.degree() < d.degree(), "remainder degree drops");
        BigRational x = random_rational(rng);
        s.check((a * b).eval(x) == a.eval(x) * b.eval(x), "eval respects product");
        s.check((a + b).eval(x) == a.eval(x) + b.eval(x), "eval respects sum");
    }
}

void suite_poly_gcd(Suite& s, Rng& rng) {
    EpsPolynomial two_e(std::vector<BigRational>{BigRational(0), BigRational(2)});
    s.check(poly_gcd(two_e, EpsPolynomial(4)).is_one(), "gcd(2e, 4) = 1");
    EpsPolynomial e2m1(std::vector<BigRational>{BigRational(-1), BigRational(0), BigRational(1)});
    EpsPolynomial em1(std::vector<BigRational>{BigRational(-1), BigRational(1)});
    s.check(poly_gcd(e2m1, em1) == em1, "gcd(e^2-1, e-1) = e-1");
    bool threw = false;
    try {
        poly_gcd(EpsPolynomial(), EpsPolynomial());
    } catch (const BothZero&) {
        threw = true;
    }
    s.check(threw, "gcd(0,0) throws BothZero");
    for (int t = 0; t < 25; ++t) {
        EpsPolynomial a = nonzero_poly(rng, 4), b = nonzero_poly(rng, 4);
        EpsPolynomial g = poly_gcd(a, b);
        s.check(g.leading().is_one(), "gcd is monic");
        s.check(a.divmod(g).second.is_zero(), "gcd divides first");
        s.check(b.divmod(g).second.is_zero(), "gcd divides second");
        EpsPolynomial m = nonzero_poly(rng, 2);
        EpsPolynomial lifted = poly_gcd(a * m, b * m);
        EpsPolynomial expect = (g * m).scaled(BigRational(1) / (g * m).leading());
        s.check(lifted == expect, "gcd respects common factors");
    }
}

void suite_eps_field(Suite& s, Rng& rng) {
    EpsPolynomial e2m1(std::vector<BigRational>{BigRational(-1), BigRational(0), BigRational(1)});
    EpsPolynomial em1(std::vector<BigRational>{BigRational(-1), BigRational(1)});
    EpsPolynomial ep1(std::vector<BigRational>{BigRational(1), BigRational(1)});
    s.check(EpsRational(e2m1, em1) == EpsRational(ep1), "(e^2-1)/(e-1) reduces to e+1");

    bool pole = false;
    try {
        EpsRational(EpsPolynomial(1), em1).eval_at(BigRational(1));
    } catch (const PoleAtPoint&) {
        pole = true;
    }
    s.check(pole, "pole detected at e=1");

    for (int t = 0; t < 20; ++t) {
        EpsRational a(random_poly(rng, 3), nonzero_poly(rng, 2));
        EpsRational b(random_poly(rng, 3), nonzero_poly(rng, 2));
        EpsRational c(random_poly(rng, 2), nonzero_poly(rng, 2));
        s.check(a + b == b + a, "eps addition commutes");
        s.check(a * b == b * a, "eps multiplication commutes");
        s.check(a * (b + c) == a * b + a * c, "eps multiplication distributes");
        s.check((a - a).is_zero(), "eps subtraction cancels");
        if (!b.is_zero()) s.check((a / b) * b == a, "eps division round-trips");
        EpsPolynomial p = random_poly(rng, 3);
        BigRational x = random_rational(rng);
        s.check(EpsRational(p).eval_at(x) == p.eval(x), "polynomial eval agrees");
        s.check(EpsRational(p).is_polynomial(), "polynomials report as polynomials");
    }
}

void suite_matrix_parse(Suite& s, Rng& rng, const std::vector<int>& sizes) {
    for (int n : sizes_in(sizes, 1, 8))
        for (int t = 0; t < 5; ++t) {
            RationalMatrix m = random_int_matrix(n, -99, 99, rng);
            s.check(parse_matrix(serialize_matrix(m)) == m, "parse inverts serialize");
        }
    s.check(parse_matrix("1/2").order() == 1, "1x1 parses");
    s.check(parse_matrix("# lead\n1 0\n\n0 1 # tail\n") == parse_matrix("1 0\n0 1"),
            "comments and blank lines are skipped");
    bool ragged = false;
    try {
        parse_matrix("1 2\n3");
    } catch (const RaggedRows&) {
        ragged = true;
    }
    s.check(ragged, "ragged rows rejected");
    bool notsq = false;
    try {
        parse_matrix("1 2 3\n4 5 6");
    } catch (const NotSquare&) {
        notsq = true;
    }
    s.check(notsq, "non-square rejected");
    bool badtok = false;
    try {
        parse_matrix("1 x\n2 3");
    } catch (const BadToken&) {
        badtok = true;
    }
    s.check(badtok, "bad token rejected");
}

void suite_shift_sign(Suite& s, Rng& rng, const std::vector<int>& sizes) {
    for (int n : sizes_in(sizes, 1, 5))
        for (int t = 0; t < 3; ++t) {
            RationalMatrix m = random_int_matrix(n, -9, 9, rng);
            BigRational ref = det_laplace(m);
            for (Axis axis : {Axis::Rows, Axis::Cols})
                for (int k = 0; k <= n; ++k) {
                    auto [shifted, sign] = cyclic_shift(m, axis, k);
                    BigRational got = det_laplace(shifted);
                    s.check(got == (sign < 0 ? -ref : ref),
                            "shift sign at n=" + std::to_string(n) + " k=" + std::to_string(k));
                }
        }
}

void suite_first_stage_identity(Suite& s, Rng& rng) {
    RationalMatrix ones(3, BigRational(1));
    RationalMatrix zeros2(2);
    s.check(condense_once(ones) == zeros2, "rank-1 all-ones condenses to zero");
    for (int t = 0; t < 40; ++t) {
        RationalMatrix m = random_int_matrix(3, -9, 9, rng);
        if (m.at(2, 2).is_zero()) continue;
        BigRational lhs = det2(condense_once(m)) / m.at(2, 2);
        s.check(lhs == det_definition(m), "first-stage identity");
    }
}

void suite_method_agreement(Suite& s, Rng& rng) {
    for (int t = 0; t < 500; ++t) {
        RationalMatrix m = random_int_matrix(5, -9, 9, rng);
        BigRational expect = det_laplace(m);
        DodgsonResult dodgson = dodgson_det(m, {.seed = rng()});
        ChioResult chio = chio_det(m);
        s.check(dodgson.value == expect, "condensation agrees with expansion");
        s.check(chio.value == expect, "fixed-pivot agrees with expansion");
        s.check(det_definition(m) == expect, "definition agrees with expansion");
    }
}

void suite_symbolic_degree(Suite& s, Rng& rng) {
    RationalMatrix id3(3);
    for (int i = 1; i <= 3; ++i) id3.at(i, i) = BigRational(1);
    SymbolicResult center = condense_with_symbolic_entry(id3, 2, 2);
    s.check(center.polynomial == EpsRational::variable(), "identity center gives e");

    int done = 0;
    while (done < 40) {
        RationalMatrix m = random_int_matrix(4, -9, 9, rng);
        int i = int_in(rng, 1, 4), j = int_in(rng, 1, 4);
        try {
            SymbolicResult r = condense_with_symbolic_entry(m, i, j);
            s.check(r.polynomial.as_polynomial().degree() <= 1, "degree at most 1");
            s.check(r.polynomial.eval_at(m.at(i, j)) == det_laplace(m),
                    "restoring the entry restores the determinant");
            ++done;
        } catch (const SymbolicZeroDivisor&) {
            // degenerate draw; try another
        }
    }
}

void suite_trace_replay(Suite& s, Rng& rng) {
    for (int t = 0; t < 30; ++t) {
        int n = int_in(rng, 3, 5);
        RationalMatrix m = random_int_matrix(n, -9, 9, rng);
        DodgsonResult r = dodgson_det(m, {.seed = rng()});
        if (r.trace.stages.empty()) continue; // perturbed run, no rational stages
        const auto& st = r.trace.stages;
        for (std::size_t k = 1; k < st.size(); ++k) {
            RationalMatrix redo = condense_once(st[k - 1], k >= 2 ? &st[k - 2] : nullptr);
            s.check(redo == st[k], "stage " + std::to_string(k) + " replays bit-for-bit");
        }
    }
}

void suite_repair_value(Suite& s, Rng& rng) {
    RationalMatrix id4(4);
    for (int i = 1; i <= 4; ++i) id4.at(i, i) = BigRational(1);
    DodgsonResult r4 = dodgson_det(id4, {.seed = 7});
    s.check(r4.value == BigRational(1), "4x4 identity evaluates to 1");
    s.check(!r4.trace.perturbations.empty(), "4x4 identity requires perturbation");

    int repaired = 0;
    for (int t = 0; t < 25; ++t) {
        int n = int_in(rng, 4, 5);
        RationalMatrix m = random_int_matrix(n, -2, 2, rng); // dense with zeros
        DodgsonResult r = dodgson_det(m, {.seed = rng()});
        s.check(r.value == det_laplace(m), "repaired value matches expansion");
        if (!r.trace.shifts_applied.empty() || !r.trace.perturbations.empty()) ++repaired;
    }
    s.check(repaired > 0, "at least one sparse draw exercised a repair");
}

void suite_chio_scaling(Suite& s, Rng& rng) {
    for (int n : {3, 4, 5})
        for (int t = 0; t < 15; ++t) {
            RationalMatrix m = random_int_matrix(n, -9, 9, rng);
            BigRational ref = det_laplace(m);
            for (int r = 1; r <= n; ++r)
                for (int c = 1; c <= n; ++c) {
                    if (m.at(r, c).is_zero()) continue;
                    BigRational lhs = det_laplace(chio_reduce(m, r, c));
                    BigRational rhs = m.at(r, c).pow(static_cast<unsigned>(n - 2)) * ref;
                    s.check(lhs == rhs, "scaling identity at pivot " + at(r, c));
                }
        }
}

void suite_chio_pivot_independence(Suite& s, Rng& rng, const std::vector<int>& sizes) {
    for (int n : sizes_in(sizes, 1, 6))
        for (int t = 0; t < 10; ++t) {
            RationalMatrix m = random_int_matrix(n, -9, 9, rng);
            BigRational expect = n <= 5 ? det_laplace(m) : chio_det(m).value;
            s.check(chio_det(m, {.policy = PivotPolicy::MaxMagnitude}).value == expect,
                    "max-magnitude policy agrees");
            s.check(chio_det(m, {.policy = PivotPolicy::FirstNonzero}).value == expect,
                    "first-nonzero policy agrees");
            if (n >= 3 && !m.at(1, 1).is_zero()) {
                ChioOptions forced;
                forced.forced_pivots = {{1, 1}};
                s.check(chio_det(m, forced).value == expect, "forced corner pivot agrees");
            }
        }
}

void suite_chio_deferred(Suite& s, Rng& rng) {
    for (int t = 0; t < 30; ++t) {
        int n = int_in(rng, 3, 6);
        RationalMatrix m = random_int_matrix(n, -9, 9, rng);
        ChioResult r = chio_det(m);
        s.check(r.trace.final_z == r.value * r.trace.divisor, "final Z = value * divisor");
        BigRational divisor(1);
        for (const auto& stage : r.trace.stages)
            if (stage.r > 0)
                divisor *= stage.pivot.pow(static_cast<unsigned>(stage.matrix.order() - 2));
        s.check(divisor == r.trace.divisor, "divisor matches the pivot stack");
    }
}

void suite_chio_opcount(Suite& s, Rng& rng) {
    for (int n = 2; n <= 8; ++n) {
        RationalMatrix m = random_int_matrix(n, -9, 9, rng);
        ChioResult r = chio_det(m);
        if (r.trace.stages.back().matrix.order() > 2) continue; // zero short-circuit
        std::uint64_t expect = 0;
        for (int k = 2; k <= n - 1; ++k) expect += 2ULL * static_cast<std::uint64_t>(k) * k;
        s.check(r.trace.reduction_ops.muls == expect,
                "reduction multiplications at n=" + std::to_string(n));
        s.check(r.trace.reduction_ops.divs == 0, "reduction performs no division");
    }
}

void suite_laplace_lines(Suite& s, Rng& rng, const std::vector<int>& sizes) {
    for (int n : sizes_in(sizes, 2, 5))
        for (int t = 0; t < 5; ++t) {
            RationalMatrix m = random_int_matrix(n, -9, 9, rng);
            BigRational ref = det_laplace(m);
            for (int r = 1; r <= n; ++r)
                s.check(laplace_along_row(m, r) == ref, "row " + std::to_string(r) + " expansion");
            for (int c = 1; c <= n; ++c)
                s.check(laplace_along_column(m, c) == ref,
                        "column " + std::to_string(c) + " expansion");
        }
}

void suite_cauchy_zero(Suite& s, Rng& rng, const std::vector<int>& sizes) {
    for (int n : sizes_in(sizes, 2, 5))
        for (int t = 0; t < 5; ++t) {
            RationalMatrix m = random_int_matrix(n, -9, 9, rng);
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    if (k == l) continue;
                    s.check(cauchy_sum(m, k, l).is_zero(), "alien sum " + at(k, l));
                }
        }
    bool threw = false;
    try {
        cauchy_sum(random_int_matrix(3, -9, 9, rng), 2, 2);
    } catch (const EqualIndices&) {
        threw = true;
    }
    s.check(threw, "equal indices rejected");
}

void suite_adjugate_power(Suite& s, Rng& rng, const std::vector<int>& sizes) {
    for (int n : sizes_in(sizes, 2, 5))
        for (int t = 0; t < 5; ++t) {
            RationalMatrix m = random_int_matrix(n, -9, 9, rng);
            BigRational lhs = det_laplace(adjugate(m));
            BigRational rhs = det_laplace(m).pow(static_cast<unsigned>(n - 1));
            s.check(lhs == rhs, "adjugate determinant power at n=" + std::to_string(n));
        }
}

void suite_lemma_corner(Suite& s, Rng& rng) {
    for (int n : {3, 4, 5, 6})
        for (int t = 0; t < 20; ++t) {
            RationalMatrix m = random_int_matrix(n, -9, 9, rng);
            auto [lhs, rhs] = lemma_corner_check(m);
            s.check(lhs == rhs, "corner-minor identity at n=" + std::to_string(n));
        }
    RationalMatrix id5(5);
    for (int i = 1; i <= 5; ++i) id5.at(i, i) = BigRational(1);
    auto [lhs, rhs] = lemma_corner_check(id5);
    s.check(lhs == BigRational(1) && rhs == BigRational(1), "identity corner case");
}

void suite_det_axioms(Suite& s, Rng& rng, const std::vector<int>& sizes) {
    for (int n : sizes_in(sizes, 2, 5))
        for (int t = 0; t < 5; ++t) {
            RationalMatrix m = random_int_matrix(n, -9, 9, rng);
            BigRational ref = det_laplace(m);

            int r1 = int_in(rng, 1, n), r2 = int_in(rng, 1, n);
            if (r1 != r2) {
                RationalMatrix swapped = m;
                for (int j = 1; j <= n; ++j) std::swap(swapped.at(r1, j), swapped.at(r2, j));
                s.check(det_laplace(swapped) == -ref, "row swap negates");
            }

            BigRational c = random_rational(rng);
            RationalMatrix scaled = m;
            for (int j = 1; j <= n; ++j) scaled.at(r1, j) *= c;
            s.check(det_laplace(scaled) == c * ref, "row scaling scales");

            if (r1 != r2) {
                RationalMatrix sheared = m;
                for (int j = 1; j <= n; ++j)
                    sheared.at(r1, j) += c * m.at(r2, j);
                s.check(det_laplace(sheared) == ref, "row shear preserves");
            }
        }
}

void suite_definition_laplace(Suite& s, Rng& rng) {
    // Exhaustive over all 2x2 matrices with entries in {-1, 0, 1}.
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int c = -1; c <= 1; ++c)
                for (int d = -1; d <= 1; ++d) {
                    RationalMatrix m(2);
                    m.at(1, 1) = BigRational(a);
                    m.at(1, 2) = BigRational(b);
                    m.at(2, 1) = BigRational(c);
                    m.at(2, 2) = BigRational(d);
                    BigRational expect(a * d - b * c);
                    s.check(det_definition(m) == expect && det_laplace(m) == expect,
                            "2x2 exhaustive");
                }
    for (int n = 3; n <= 7; ++n) {
        int reps = n <= 5 ? 10 : 2;
        for (int t = 0; t < reps; ++t) {
            RationalMatrix m = random_int_matrix(n, -9, 9, rng);
            s.check(det_definition(m) == det_laplace(m),
                    "definition equals expansion at n=" + std::to_string(n));
        }
    }
}

} // namespace

SelftestReport run_selftest(const SelftestConfig& config) {
    struct Entry {
        std::string name;
        std::function<void(Suite&, Rng&)> run;
    };
    const std::vector<int>& sizes = config.sizes;
    std::vector<Entry> entries = {
        {"rational-axioms", [](Suite& s, Rng& r) { suite_rational_axioms(s, r); }},
        {"rational-parse", [](Suite& s, Rng& r) { suite_rational_parse(s, r); }},
        {"poly-arithmetic", [](Suite& s, Rng& r) { suite_poly_arithmetic(s, r); }},
        {"poly-gcd", [](Suite& s, Rng& r) { suite_poly_gcd(s, r); }},
        {"eps-field", [](Suite& s, Rng& r) { suite_eps_field(s, r); }},
        {"matrix-parse", [&](Suite& s, Rng& r) { suite_matrix_parse(s, r, sizes); }},
        {"shift-sign", [&](Suite& s, Rng& r) { suite_shift_sign(s, r, sizes); }},
        {"first-stage-identity", [](Suite& s, Rng& r) { suite_first_stage_identity(s, r); }},
        {"method-agreement", [](Suite& s, Rng& r) { suite_method_agreement(s, r); }},
        {"symbolic-degree", [](Suite& s, Rng& r) { suite_symbolic_degree(s, r); }},
        {"trace-replay", [](Suite& s, Rng& r) { suite_trace_replay(s, r); }},
        {"repair-value", [](Suite& s, Rng& r) { suite_repair_value(s, r); }},
        {"chio-scaling", [](Suite& s, Rng& r) { suite_chio_scaling(s, r); }},
        {"chio-pivot-independence",
         [&](Suite& s, Rng& r) { suite_chio_pivot_independence(s, r, sizes); }},
        {"chio-deferred-division", [](Suite& s, Rng& r) { suite_chio_deferred(s, r); }},
        {"chio-op-count", [](Suite& s, Rng& r) { suite_chio_opcount(s, r); }},
        {"laplace-all-lines", [&](Suite& s, Rng& r) { suite_laplace_lines(s, r, sizes); }},
        {"cauchy-zero", [&](Suite& s, Rng& r) { suite_cauchy_zero(s, r, sizes); }},
        {"adjugate-power", [&](Suite& s, Rng& r) { suite_adjugate_power(s, r, sizes); }},
        {"lemma-corner", [](Suite& s, Rng& r) { suite_lemma_corner(s, r); }},
        {"determinant-axioms", [&](Suite& s, Rng& r) { suite_det_axioms(s, r, sizes); }},
        {"definition-vs-laplace", [](Suite& s, Rng& r) { suite_definition_laplace(s, r); }},
    };

    SelftestReport report;
    std::string sizes_text;
    for (std::size_t k = 0; k < sizes.size(); ++k)
        sizes_text += (k ? "," : "") + std::to_string(sizes[k]);
    report.text = "selftest seed=" + std::to_string(config.seed) + " sizes=" + sizes_text + "\n";

    int passed = 0;
    for (std::size_t idx = 0; idx < entries.size(); ++idx) {
        Suite suite;
        Rng rng(split_seed(config.seed, idx + 100));
        std::string crash;
        try {
            entries[idx].run(suite, rng);
        } catch (const Error& e) {
            crash = e.what();
        }
        if (suite.ok() && crash.empty()) {
            ++passed;
            report.text += "ok " + entries[idx].name + " (" + std::to_string(suite.checks()) +
                           " checks)\n";
        } else {
            report.passed = false;
            std::string why = crash.empty() ? suite.detail() : "unexpected error: " + crash;
            report.text += "FAIL " + entries[idx].name + ": " + why + " (after " +
                           std::to_string(suite.checks()) + " checks)\n";
        }
    }
    report.text += "selftest: " + std::to_string(passed) + "/" +
                   std::to_string(entries.size()) + " suites passed\n";
    return report;
}

} // namespace detkit
