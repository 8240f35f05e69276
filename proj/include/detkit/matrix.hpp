#pragma once

#include <string>
#include <utility>
#include <vector>

#include "detkit/eps_rational.hpp"
#include "detkit/errors.hpp"
#include "detkit/field.hpp"
#include "detkit/rational.hpp"

namespace detkit {

// Dense square matrix with 1-based indexing, matching the usual determinant
// notation. Row-major storage.
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int order, const T& fill = T{})
        : n_(order), data_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), fill) {}

    static SquareMatrix from_rows(const std::vector<std::vector<T>>& rows) {
        std::size_t want = rows.empty() ? 0 : rows[0].size();
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (rows[r].size() != want)
                throw RaggedRows(static_cast<int>(r) + 1, rows[r].size(), want);
        if (rows.empty() || rows.size() != want)
            throw NotSquare(rows.size(), want);
        SquareMatrix m(static_cast<int>(rows.size()));
        for (int i = 1; i <= m.n_; ++i)
            for (int j = 1; j <= m.n_; ++j)
                m.at(i, j) = rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        return m;
    }

    int order() const { return n_; }

    T& at(int i, int j) {
        check(i, j);
        return data_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
                     static_cast<std::size_t>(j - 1)];
    }
    const T& at(int i, int j) const {
        check(i, j);
        return data_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
                     static_cast<std::size_t>(j - 1)];
    }

    bool operator==(const SquareMatrix& o) const { return n_ == o.n_ && data_ == o.data_; }

private:
    void check(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) throw IndexOutOfRange(i, j, n_);
    }
    int n_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = SquareMatrix<BigRational>;
using EpsMatrix = SquareMatrix<EpsRational>;

// Text format: one row per line, whitespace-separated entries, '#' starts a
// comment, blank lines are skipped. Entries are integers or "p/q" rationals.
RationalMatrix parse_matrix(const std::string& text);

std::string serialize_matrix(const RationalMatrix& m);

// ad - bc of a 2x2 matrix. The base case every reduction bottoms out in.
template <typename T>
T det2(const SquareMatrix<T>& m, const FieldOps<T>& ops = FieldOps<T>{}) {
    if (m.order() != 2) throw WrongOrder(m.order(), 2);
    return ops.sub(ops.mul(m.at(1, 1), m.at(2, 2)), ops.mul(m.at(1, 2), m.at(2, 1)));
}

// Matrix with row i and column j removed.
template <typename T>
SquareMatrix<T> submatrix(const SquareMatrix<T>& m, int i, int j) {
    int n = m.order();
    if (i < 1 || i > n || j < 1 || j > n) throw IndexOutOfRange(i, j, n);
    SquareMatrix<T> out(n - 1);
    for (int r = 1, rr = 1; r <= n; ++r) {
        if (r == i) continue;
        for (int c = 1, cc = 1; c <= n; ++c) {
            if (c == j) continue;
            out.at(rr, cc) = m.at(r, c);
            ++cc;
        }
        ++rr;
    }
    return out;
}

// The k-by-k contiguous block whose top-left corner sits at (i, j).
template <typename T>
SquareMatrix<T> contiguous_minor(const SquareMatrix<T>& m, int i, int j, int k) {
    int n = m.order();
    if (k < 1 || i < 1 || j < 1 || i + k - 1 > n || j + k - 1 > n)
        throw IndexOutOfRange(i, j, n);
    SquareMatrix<T> out(k);
    for (int r = 1; r <= k; ++r)
        for (int c = 1; c <= k; ++c)
            out.at(r, c) = m.at(i + r - 1, j + c - 1);
    return out;
}

enum class Axis { Rows, Cols };

template <typename T>
struct ShiftResult {
    SquareMatrix<T> matrix;
    int sign; // determinant of the rotation as a permutation
};

// Rotate rows up (or columns left) by k positions. A one-step rotation is an
// n-cycle with sign (-1)^(n-1), so k steps contribute (-1)^((n-1)k).
template <typename T>
ShiftResult<T> cyclic_shift(const SquareMatrix<T>& m, Axis axis, int k) {
    int n = m.order();
    if (n == 0 || k < 0) throw IndexOutOfRange(k, k, n);
    int r = k % n;
    SquareMatrix<T> out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (axis == Axis::Rows)
                out.at(i, j) = m.at((i - 1 + r) % n + 1, j);
            else
                out.at(i, j) = m.at(i, (j - 1 + r) % n + 1);
        }
    int sign = ((n - 1) * r) % 2 == 0 ? 1 : -1;
    return {std::move(out), sign};
}

inline EpsMatrix lift_to_eps(const RationalMatrix& m) {
    EpsMatrix out(m.order());
    for (int i = 1; i <= m.order(); ++i)
        for (int j = 1; j <= m.order(); ++j)
            out.at(i, j) = EpsRational(m.at(i, j));
    return out;
}

} // namespace detkit
