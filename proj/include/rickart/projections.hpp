#pragma once

#include "linalg.hpp"

namespace rickart {

// A square matrix certified self-adjoint idempotent. Construction goes
// through certifyProjection; the wrapper never holds anything else.
class Projection {
public:
    const Matrix& matrix() const { return m_; }

    bool operator==(const Projection&) const = default;

    friend Projection certifyProjection(const Matrix& a);

private:
    explicit Projection(Matrix m) : m_(std::move(m)) {}
    Matrix m_;
};

inline Projection certifyProjection(const Matrix& a) {
    if (!a.isSquare()) throw ShapeMismatch("projection must be square, got " + a.shapeStr());
    if (a * a != a) throw NotIdempotent("matrix is not idempotent: " + a.str());
    if (a.star() != a) throw NotSelfAdjoint("matrix is not self-adjoint: " + a.str());
    return Projection(a);
}

// e <= f iff ef = e iff fe = e; both products are evaluated and must agree.
inline bool projLe(const Projection& e, const Projection& f) {
    e.matrix().checkSameShape(f.matrix(), "projLe");
    bool ef = e.matrix() * f.matrix() == e.matrix();
    bool fe = f.matrix() * e.matrix() == e.matrix();
    if (ef != fe)
        throw InternalDisagreement("ef = e and fe = e disagree for projections " + e.matrix().str() +
                                   ", " + f.matrix().str());
    return ef;
}

// Orthogonal projection onto the span of the columns of b. Requires the
// Gram matrix star(b) b to be invertible, which certified-proper scalar
// domains guarantee for independent columns.
inline Projection projectionOnto(const Matrix& b) {
    if (b.cols() == 0) {
        Matrix z(b.rows(), b.rows(), b.field());
        return certifyProjection(z);
    }
    Matrix gram = b.star() * b;
    auto gi = inverse(gram);
    if (!gi) throw SingularGram("singular Gram matrix for basis " + b.str());
    return certifyProjection(b * (*gi) * b.star());
}

inline Projection projOrtho(const Projection& e) {
    return certifyProjection(Matrix::identity(e.matrix().rows(), e.matrix().field()) - e.matrix());
}

// Basis of ran(e) ∩ ran(f): a nullspace vector (u; v) of [B_e | -B_f]
// gives the common element B_e u.
inline Matrix rangeIntersectionBasis(const Matrix& be, const Matrix& bf) {
    Matrix stacked = hstack(be, -bf);
    Matrix ns = nullspaceBasis(stacked);
    Matrix coeffs(be.cols(), ns.cols(), be.field());
    for (std::size_t i = 0; i < be.cols(); ++i)
        for (std::size_t j = 0; j < ns.cols(); ++j) coeffs.at(i, j) = ns.at(i, j);
    return columnSpaceBasis(be * coeffs);
}

inline Projection projMeet(const Projection& e, const Projection& f) {
    e.matrix().checkSameShape(f.matrix(), "projMeet");
    return projectionOnto(rangeIntersectionBasis(columnSpaceBasis(e.matrix()),
                                                 columnSpaceBasis(f.matrix())));
}

inline Projection projJoin(const Projection& e, const Projection& f) {
    e.matrix().checkSameShape(f.matrix(), "projJoin");
    Projection j = projectionOnto(
        columnSpaceBasis(hstack(columnSpaceBasis(e.matrix()), columnSpaceBasis(f.matrix()))));
    // De Morgan cross-check against the complementary meet
    Projection viaMeet = projOrtho(projMeet(projOrtho(e), projOrtho(f)));
    if (j != viaMeet)
        throw InternalDisagreement("join disagrees with De Morgan dual for " + e.matrix().str() +
                                   ", " + f.matrix().str());
    return j;
}

} // namespace rickart
