#pragma once

#include <optional>
#include <vector>

#include "matrix.hpp"

namespace rickart {

struct Rref {
    Matrix reduced;              // reduced row-echelon form
    std::vector<std::size_t> pivots; // pivot column per pivot row
    std::size_t rank() const { return pivots.size(); }
};

// Gauss-Jordan over the exact field. Pivot choice: first row (lowest index)
// with a nonzero entry in the current column.
inline Rref rref(const Matrix& a) {
    Matrix m = a;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && m.at(pr, c).isZero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
        Scalar inv = m.at(r, c).invert();
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).isZero()) continue;
            Scalar f = m.at(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& a) { return rref(a).rank(); }

// Columns form a basis of the nullspace {z : a z = 0}; n x (n - rank).
// Standard free-variable construction from the RREF, deterministic.
inline Matrix nullspaceBasis(const Matrix& a) {
    Rref rr = rref(a);
    std::size_t n = a.cols();
    std::vector<bool> isPivot(n, false);
    for (auto c : rr.pivots) isPivot[c] = true;
    std::vector<std::size_t> freeCols;
    for (std::size_t c = 0; c < n; ++c)
        if (!isPivot[c]) freeCols.push_back(c);
    Matrix basis(n, freeCols.size(), a.field());
    for (std::size_t k = 0; k < freeCols.size(); ++k) {
        std::size_t fc = freeCols[k];
        basis.at(fc, k) = Scalar::one(a.field());
        for (std::size_t pr = 0; pr < rr.pivots.size(); ++pr)
            basis.at(rr.pivots[pr], k) = -rr.reduced.at(pr, fc);
    }
    return basis;
}

// n x r matrix whose columns are the pivot columns of a; basis of ran(a).
inline Matrix columnSpaceBasis(const Matrix& a) {
    Rref rr = rref(a);
    Matrix b(a.rows(), rr.rank(), a.field());
    for (std::size_t k = 0; k < rr.pivots.size(); ++k)
        for (std::size_t i = 0; i < a.rows(); ++i) b.at(i, k) = a.at(i, rr.pivots[k]);
    return b;
}

inline Matrix rowSpaceBasis(const Matrix& a) { return columnSpaceBasis(a.star()).star(); }

// Solve a X = b columnwise; nullopt when inconsistent.
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("solve: row count mismatch");
    Rref rr = rref(hstack(a, b));
    // any pivot in the appended block means inconsistency
    for (auto c : rr.pivots)
        if (c >= a.cols()) return std::nullopt;
    Matrix x(a.cols(), b.cols(), a.field());
    for (std::size_t pr = 0; pr < rr.pivots.size(); ++pr)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(rr.pivots[pr], j) = rr.reduced.at(pr, a.cols() + j);
    return x;
}

inline std::optional<Matrix> inverse(const Matrix& a) {
    if (!a.isSquare()) throw ShapeMismatch("inverse of non-square matrix");
    Rref rr = rref(hstack(a, Matrix::identity(a.rows(), a.field())));
    if (rr.rank() < a.rows() || (rr.rank() > 0 && rr.pivots.back() >= a.cols())) return std::nullopt;
    Matrix inv(a.rows(), a.rows(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) inv.at(i, j) = rr.reduced.at(i, a.cols() + j);
    return inv;
}

struct RankFactorization {
    Matrix f; // full column rank, rows x r
    Matrix g; // full row rank, r x cols
    std::size_t rank;
};

// a = f g with r = rank(a). f = pivot columns of a, g = nonzero rows of the
// RREF. The zero matrix factors through rank 0 (empty f and g).
inline RankFactorization rankFactorize(const Matrix& a) {
    Rref rr = rref(a);
    std::size_t r = rr.rank();
    Matrix f(a.rows(), r, a.field());
    Matrix g(r, a.cols(), a.field());
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t i = 0; i < a.rows(); ++i) f.at(i, k) = a.at(i, rr.pivots[k]);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t j = 0; j < a.cols(); ++j) g.at(k, j) = rr.reduced.at(k, j);
    return {std::move(f), std::move(g), r};
}

} // namespace rickart
