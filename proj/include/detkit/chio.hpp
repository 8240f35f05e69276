#pragma once

#include <utility>
#include <vector>

#include "detkit/matrix.hpp"

namespace detkit {

// Sign of (r-i)(s-j): +1 when the entry sits in the same quadrant
// orientation as the pivot, -1 otherwise. Undefined on the pivot's own row
// or column.
inline int sign_factor(int i, int j, int r, int s) {
    if (i == r || j == s) throw OnPivotLine();
    return ((r - i) > 0) == ((s - j) > 0) ? 1 : -1;
}

// One fixed-pivot reduction step: entry (i,j) of the result is
// sigma_ij * (a_ij*a_rs - a_is*a_rj), taken over the rows i != r and columns
// j != s in their original relative order. Exactly two multiplications per
// produced entry; the sign is applied by negation, not multiplication.
template <FieldElement T>
SquareMatrix<T> chio_reduce(const SquareMatrix<T>& a, int r, int s,
                            const FieldOps<T>& ops = FieldOps<T>{}) {
    int n = a.order();
    if (n < 2) throw WrongOrder(n, 2);
    const T& pivot = a.at(r, s);
    if (pivot.is_zero()) throw ZeroPivot(r, s);
    SquareMatrix<T> out(n - 1);
    int oi = 1;
    for (int i = 1; i <= n; ++i) {
        if (i == r) continue;
        int oj = 1;
        for (int j = 1; j <= n; ++j) {
            if (j == s) continue;
            T v = ops.sub(ops.mul(a.at(i, j), pivot), ops.mul(a.at(i, s), a.at(r, j)));
            out.at(oi, oj) = sign_factor(i, j, r, s) > 0 ? std::move(v) : -v;
            ++oj;
        }
        ++oi;
    }
    return out;
}

enum class PivotPolicy {
    MaxMagnitude, // largest |entry|, ties to the lexicographically smallest (r,s)
    FirstNonzero, // row-major scan
};

struct ChioStageRec {
    RationalMatrix matrix; // the stage as it stood before reduction
    int r = 0, s = 0;      // chosen pivot; 0,0 for the terminal stage
    BigRational pivot;
};

struct ChioTrace {
    std::vector<ChioStageRec> stages; // orders n down to the terminal 2x2/1x1
    BigRational divisor{1};           // product of stage-m pivots to the power m-2
    BigRational final_z;              // value of the fully reduced determinant
    OpCounter reduction_ops;          // ops spent inside chio_reduce calls only
};

struct ChioOptions {
    PivotPolicy policy = PivotPolicy::MaxMagnitude;
    // Pivots imposed on the leading stages (1-based, relative to each
    // successive stage matrix); at most n-2 are consumed, the policy takes
    // over afterwards.
    std::vector<std::pair<int, int>> forced_pivots;
    OpCounter* counter = nullptr;
};

struct ChioResult {
    BigRational value;
    ChioTrace trace;
};

// Reduce to a 2x2, take its determinant, and apply the stacked divisor in a
// single deferred division. An all-zero stage short-circuits to 0.
ChioResult chio_det(const RationalMatrix& a, const ChioOptions& options = {});

} // namespace detkit
