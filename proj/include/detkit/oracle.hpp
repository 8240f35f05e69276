#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "detkit/matrix.hpp"

namespace detkit {

// Deliberately naive ground-truth evaluators. Everything here trades speed
// for being an independent check on the reduction kernels.

namespace detail {
inline int permutation_parity(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}
} // namespace detail

// Signed sum over all n! permutations, straight from the definition.
template <FieldElement T>
T det_definition(const SquareMatrix<T>& m, const FieldOps<T>& ops = FieldOps<T>{}) {
    int n = m.order();
    if (n < 1) throw TooSmall(n, 1);
    if (n > 8) throw TooLarge(n, 8);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    T acc{};
    do {
        T term = m.at(1, perm[0]);
        for (int i = 2; i <= n; ++i) term = ops.mul(term, m.at(i, perm[static_cast<std::size_t>(i - 1)]));
        acc = detail::permutation_parity(perm) > 0 ? ops.add(acc, term) : ops.sub(acc, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

// Recursive cofactor expansion, always along the first row. Zero entries are
// multiplied like any other so the operation count stays input-independent.
template <FieldElement T>
T det_laplace(const SquareMatrix<T>& m, const FieldOps<T>& ops = FieldOps<T>{}) {
    int n = m.order();
    if (n < 1) throw TooSmall(n, 1);
    if (n == 1) return m.at(1, 1);
    if (n == 2) return det2(m, ops);
    T acc{};
    for (int j = 1; j <= n; ++j) {
        T term = ops.mul(m.at(1, j), det_laplace(submatrix(m, 1, j), ops));
        if (j == 1)
            acc = term;
        else
            acc = j % 2 == 1 ? ops.add(acc, term) : ops.sub(acc, term);
    }
    return acc;
}

// Signed minor: (-1)^(i+j) times the determinant with row i, column j deleted.
template <FieldElement T>
T cofactor(const SquareMatrix<T>& m, int i, int j, const FieldOps<T>& ops = FieldOps<T>{}) {
    if (m.order() < 2) throw TooSmall(m.order(), 2);
    T minor_det = det_laplace(submatrix(m, i, j), ops);
    return (i + j) % 2 == 0 ? minor_det : -minor_det;
}

template <FieldElement T>
T laplace_along_row(const SquareMatrix<T>& m, int r, const FieldOps<T>& ops = FieldOps<T>{}) {
    T acc{};
    for (int j = 1; j <= m.order(); ++j)
        acc = ops.add(acc, ops.mul(m.at(r, j), cofactor(m, r, j, ops)));
    return acc;
}

template <FieldElement T>
T laplace_along_column(const SquareMatrix<T>& m, int c, const FieldOps<T>& ops = FieldOps<T>{}) {
    T acc{};
    for (int i = 1; i <= m.order(); ++i)
        acc = ops.add(acc, ops.mul(m.at(i, c), cofactor(m, i, c, ops)));
    return acc;
}

// Alien-cofactor sum: entries of column k against cofactors of column l.
// Identically zero for k != l.
template <FieldElement T>
T cauchy_sum(const SquareMatrix<T>& m, int k, int l, const FieldOps<T>& ops = FieldOps<T>{}) {
    if (k == l) throw EqualIndices();
    T acc{};
    for (int a = 1; a <= m.order(); ++a)
        acc = ops.add(acc, ops.mul(m.at(a, k), cofactor(m, a, l, ops)));
    return acc;
}

// Cofactor grid, entry (i,j) = cofactor(A, i, j). Its determinant equals
// det(A)^(n-1).
template <FieldElement T>
SquareMatrix<T> adjugate(const SquareMatrix<T>& m, const FieldOps<T>& ops = FieldOps<T>{}) {
    int n = m.order();
    if (n < 2) throw TooSmall(n, 2);
    SquareMatrix<T> out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            out.at(i, j) = cofactor(m, i, j, ops);
    return out;
}

// The corner-minor identity: det of the 2x2 grid of (n-1)-order corner
// minors equals det(A) times the central (n-2)-order minor. Returns both
// sides so callers can report a mismatch precisely.
template <FieldElement T>
std::pair<T, T> lemma_corner_check(const SquareMatrix<T>& m, const FieldOps<T>& ops = FieldOps<T>{}) {
    int n = m.order();
    if (n < 3) throw TooSmall(n, 3);
    SquareMatrix<T> corners(2);
    corners.at(1, 1) = det_laplace(contiguous_minor(m, 1, 1, n - 1), ops);
    corners.at(1, 2) = det_laplace(contiguous_minor(m, 1, 2, n - 1), ops);
    corners.at(2, 1) = det_laplace(contiguous_minor(m, 2, 1, n - 1), ops);
    corners.at(2, 2) = det_laplace(contiguous_minor(m, 2, 2, n - 1), ops);
    T lhs = det2(corners, ops);
    T central = n == 3 ? m.at(2, 2) : det_laplace(contiguous_minor(m, 2, 2, n - 2), ops);
    T rhs = ops.mul(det_laplace(m, ops), central);
    return {std::move(lhs), std::move(rhs)};
}

} // namespace detkit
