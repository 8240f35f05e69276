#include "detkit/dodgson.hpp"

#include <algorithm>

#include "detkit/random_matrix.hpp"

namespace detkit {
namespace {

template <FieldElement T>
struct Chain {
    T value;
    std::vector<SquareMatrix<T>> stages;
};

// Condense from `a` all the way down to 1x1, keeping every stage. On a
// vanishing interior divisor this throws CondensationAbort; the divisor used
// while producing stage t+1 lives in stage t-1, whose entry (i,j) is the
// t-by-t contiguous minor of `a` cornered at (i,j).
template <FieldElement T>
Chain<T> run_chain(const SquareMatrix<T>& a, const FieldOps<T>& ops) {
    std::vector<SquareMatrix<T>> stages;
    stages.push_back(a);
    while (stages.back().order() > 1) {
        std::size_t t = stages.size() - 1;
        const SquareMatrix<T>* prev = t >= 1 ? &stages[t - 1] : nullptr;
        try {
            auto next = condense_once(stages.back(), prev, ops);
            stages.push_back(std::move(next));
        } catch (const ZeroDivisor& z) {
            throw detail::CondensationAbort(z.i, z.j, static_cast<int>(t));
        }
    }
    T value = stages.back().at(1, 1);
    return {std::move(value), std::move(stages)};
}

struct Block {
    int i, j, size;
    bool operator==(const Block&) const = default;
};

} // namespace

DodgsonResult dodgson_det(const RationalMatrix& a, const DodgsonOptions& options) {
    int n = a.order();
    if (n < 1) throw TooSmall(n, 1);
    FieldOps<BigRational> ops(options.counter);

    if (n == 1) {
        DodgsonResult out{a.at(1, 1), {}};
        out.trace.stages.push_back(a);
        return out;
    }

    detail::CondensationAbort first_failure(0, 0, 0);
    try {
        auto chain = run_chain(a, ops);
        DodgsonResult out{std::move(chain.value), {}};
        out.trace.stages = std::move(chain.stages);
        return out;
    } catch (const detail::CondensationAbort& abort) {
        first_failure = abort;
    }

    // A zero interior divisor means a singular contiguous minor. Rotating
    // rows/columns moves different entries into the interior while only
    // flipping the determinant's sign, so scan all rotation pairs from the
    // cheapest up before resorting to perturbation.
    for (int total = 1; total <= 2 * (n - 1); ++total) {
        for (int kr = std::max(0, total - (n - 1)); kr <= std::min(n - 1, total); ++kr) {
            int kc = total - kr;
            auto rows = cyclic_shift(a, Axis::Rows, kr);
            auto both = cyclic_shift(rows.matrix, Axis::Cols, kc);
            int sign = rows.sign * both.sign;
            try {
                auto chain = run_chain(both.matrix, ops);
                DodgsonResult out{sign < 0 ? -chain.value : chain.value, {}};
                out.trace.stages = std::move(chain.stages);
                out.trace.permutation_sign = sign;
                if (kr > 0) out.trace.shifts_applied.emplace_back(Axis::Rows, kr);
                if (kc > 0) out.trace.shifts_applied.emplace_back(Axis::Cols, kc);
                return out;
            } catch (const detail::CondensationAbort&) {
                // try the next rotation pair
            }
        }
    }

    // Every rotation still leaves some singular interior minor. Nudge the
    // offending block off the degeneracy with a_ij -> a_ij + c*e and read the
    // exact value back at e = 0. New offenders discovered on later attempts
    // are accumulated and perturbed as well.
    Rng rng(split_seed(options.seed, 1));
    std::vector<Block> blocks{{first_failure.i, first_failure.j, first_failure.block_size}};
    detail::CondensationAbort last_failure = first_failure;
    FieldOps<EpsRational> eps_ops(options.counter);
    const EpsRational eps = EpsRational::variable();

    for (int attempt = 0; attempt < 8; ++attempt) {
        EpsMatrix lifted = lift_to_eps(a);
        std::vector<Perturbation> applied;
        auto already_touched = [&](int i, int j) {
            return std::any_of(applied.begin(), applied.end(),
                               [&](const Perturbation& p) { return p.i == i && p.j == j; });
        };
        for (const Block& b : blocks) {
            int span = b.size == 1 ? 1 : 2; // 1x1 offender is a single entry
            for (int di = 0; di < span; ++di)
                for (int dj = 0; dj < span; ++dj) {
                    int i = b.i + di, j = b.j + dj;
                    if (already_touched(i, j)) continue;
                    int c = nonzero_int_in(rng, -9, 9);
                    lifted.at(i, j) = lifted.at(i, j) + eps * EpsRational(BigRational(c));
                    applied.push_back({i, j, a.at(i, j), PerturbMode::Add, c});
                }
        }
        try {
            auto chain = run_chain(lifted, eps_ops);
            const EpsPolynomial& poly = chain.value.as_polynomial();
            DodgsonResult out{poly.constant_term(), {}};
            out.trace.eps_stages = std::move(chain.stages);
            out.trace.perturbations = std::move(applied);
            out.trace.final_polynomial = chain.value;
            return out;
        } catch (const detail::CondensationAbort& abort) {
            last_failure = abort;
            Block fresh{abort.i, abort.j, abort.block_size};
            if (std::find(blocks.begin(), blocks.end(), fresh) == blocks.end())
                blocks.push_back(fresh);
        }
    }
    throw SymbolicZeroDivisor(last_failure.i, last_failure.j);
}

SymbolicResult condense_with_symbolic_entry(const RationalMatrix& a, int i, int j) {
    int n = a.order();
    if (n < 3) throw TooSmall(n, 3);
    if (i < 1 || i > n || j < 1 || j > n) throw IndexOutOfRange(i, j, n);

    EpsMatrix lifted = lift_to_eps(a);
    lifted.at(i, j) = EpsRational::variable();
    FieldOps<EpsRational> ops;
    try {
        auto chain = run_chain(lifted, ops);
        const EpsPolynomial& poly = chain.value.as_polynomial();
        if (poly.degree() > 1)
            throw Error("symbolic condensation produced degree " +
                        std::to_string(poly.degree()) + ", expected at most 1");
        SymbolicResult out{chain.value, {}};
        out.trace.eps_stages = std::move(chain.stages);
        out.trace.perturbations.push_back({i, j, a.at(i, j), PerturbMode::Replace, 0});
        out.trace.final_polynomial = chain.value;
        return out;
    } catch (const detail::CondensationAbort& abort) {
        throw SymbolicZeroDivisor(abort.i, abort.j);
    }
}

} // namespace detkit
