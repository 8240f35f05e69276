#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "detkit/matrix.hpp"

namespace detkit {

enum class PerturbMode { Replace, Add };

// One touched entry of the input matrix: either replaced by the symbol e, or
// nudged by coeff*e (coeff a small nonzero integer).
struct Perturbation {
    int i = 0, j = 0;
    BigRational original;
    PerturbMode mode = PerturbMode::Add;
    int coeff = 0; // Add mode only
};

// Everything a condensation run did, sufficient to replay or render it.
// Plain and shifted runs fill `stages`; perturbed runs fill `eps_stages`
// and `final_polynomial`.
struct CondensationTrace {
    std::vector<RationalMatrix> stages;  // orders n down to 1
    std::vector<EpsMatrix> eps_stages;   // orders n down to 1
    int permutation_sign = 1;
    std::vector<std::pair<Axis, int>> shifts_applied; // nonzero rotations only
    std::vector<Perturbation> perturbations;
    std::optional<EpsRational> final_polynomial;
};

struct DodgsonOptions {
    std::uint64_t seed = 0;     // drives perturbation coefficients only
    OpCounter* counter = nullptr;
};

struct DodgsonResult {
    BigRational value;
    CondensationTrace trace;
};

struct SymbolicResult {
    EpsRational polynomial;
    CondensationTrace trace;
};

namespace detail {
// Internal: a ZeroDivisor enriched with the order of the singular contiguous
// minor it corresponds to, in the coordinates of the matrix the run started
// from. (i, j) is the minor's top-left corner.
class CondensationAbort : public ZeroDivisor {
public:
    CondensationAbort(int i, int j, int block_size)
        : ZeroDivisor(i, j), block_size(block_size) {}
    int block_size;
};
} // namespace detail

// One condensation step. Entry (i,j) of the result is the determinant of the
// adjacent 2x2 block of `s` at (i,j); when `prev` (the stage before `s`) is
// given, it is divided by prev's interior element at (i+1, j+1). The very
// first reduction passes prev = nullptr and performs no division.
template <FieldElement T>
SquareMatrix<T> condense_once(const SquareMatrix<T>& s, const SquareMatrix<T>* prev = nullptr,
                              const FieldOps<T>& ops = FieldOps<T>{}) {
    int m = s.order();
    if (m < 2) throw WrongOrder(m, 2);
    SquareMatrix<T> out(m - 1);
    for (int i = 1; i < m; ++i)
        for (int j = 1; j < m; ++j) {
            if (prev && prev->at(i + 1, j + 1).is_zero()) throw ZeroDivisor(i + 1, j + 1);
            T numer = ops.sub(ops.mul(s.at(i, j), s.at(i + 1, j + 1)),
                              ops.mul(s.at(i, j + 1), s.at(i + 1, j)));
            out.at(i, j) = prev ? ops.div(numer, prev->at(i + 1, j + 1)) : std::move(numer);
        }
    return out;
}

// Full evaluation: plain condensation, then sign-tracked cyclic-shift
// retries, then additive-e perturbation as a last resort. The trace records
// whichever path produced the value.
DodgsonResult dodgson_det(const RationalMatrix& a, const DodgsonOptions& options = {});

// The literal replace-one-entry-by-e variant: lifts A into the rational-
// function field with entry (i,j) set to the symbol e and condenses there.
// The result is always a polynomial of degree <= 1 (a determinant is affine
// in any single entry). No repair is attempted: a divisor that is the zero
// rational function raises SymbolicZeroDivisor.
SymbolicResult condense_with_symbolic_entry(const RationalMatrix& a, int i, int j);

} // namespace detkit
