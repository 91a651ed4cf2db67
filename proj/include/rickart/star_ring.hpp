#pragma once

#include <optional>
#include <string>

#include "enumeration.hpp"
#include "projections.hpp"

namespace rickart {

// ---------------------------------------------------------------------------
// Ring descriptors
// ---------------------------------------------------------------------------

struct RingDescriptor {
    FieldDescriptor field;
    std::size_t size = 1; // ring of size x size matrices
    bool proper = false;
    bool enumerable = false;
    std::optional<std::uint64_t> cardinality;

    bool operator==(const RingDescriptor&) const = default;

    std::string str() const {
        if (field.kind == FieldDescriptor::Kind::GaussianRationals)
            return "Qi:n=" + std::to_string(size);
        return "M" + std::to_string(size) + "(F" + std::to_string(field.p) + ")";
    }
};

// The admitted proper descriptors: (Q(i), any n) and (F_p, p = 3 mod 4,
// n <= 2). Over Q(i) the hermitian form is positive definite; over such
// F_p the binary form x^2 + y^2 is anisotropic, which fails for n >= 3.
inline bool isAdmittedProper(const FieldDescriptor& f, std::size_t n) {
    if (f.kind == FieldDescriptor::Kind::GaussianRationals) return true;
    return f.p % 4 == 3 && n <= 2;
}

inline RingDescriptor makeRing(const FieldDescriptor& f, std::size_t n) {
    RingDescriptor d;
    d.field = f;
    d.size = n;
    d.proper = isAdmittedProper(f, n);
    d.enumerable = f.kind == FieldDescriptor::Kind::PrimeField;
    if (d.enumerable) {
        std::uint64_t c = 1;
        for (std::size_t k = 0; k < n * n; ++k) c *= static_cast<std::uint64_t>(f.p);
        d.cardinality = c;
    }
    return d;
}

inline RingDescriptor ringOf(const Matrix& a) {
    if (!a.isSquare()) throw ShapeMismatch("ring element must be square, got " + a.shapeStr());
    return makeRing(a.field(), a.rows());
}

// ---------------------------------------------------------------------------
// Properness certification
// ---------------------------------------------------------------------------

struct PropernessResult {
    bool proper;
    std::string reason;
    std::optional<Matrix> witness; // x != 0 with star(x) x = 0, when refuted
};

inline PropernessResult checkProper(const RingDescriptor& d) {
    if (d.field.kind == FieldDescriptor::Kind::GaussianRationals)
        return {true, "trace of x*x is the sum of |x_ij|^2, positive definite over Q(i)", {}};
    if (isAdmittedProper(d.field, d.size))
        return {true,
                "x^2 + y^2 is anisotropic over F_" + std::to_string(d.field.p) +
                    " (p = 3 mod 4), so transpose is proper for n <= " + std::to_string(2),
                {}};
    if (!d.enumerable) throw NotDecidable("cannot decide properness of " + d.str());
    constexpr std::uint64_t kSearchCap = 2'000'000;
    if (d.cardinality && *d.cardinality > kSearchCap)
        throw NotDecidable("exhaustive properness search too large for " + d.str());
    for (const Matrix& x : enumerateMatrices(d.field, d.size, d.size)) {
        if (x.isZero()) continue;
        if ((x.star() * x).isZero())
            return {false, "found x != 0 with star(x) x = 0", x};
    }
    return {true, "exhaustive search found no x != 0 with star(x) x = 0", {}};
}

// ---------------------------------------------------------------------------
// Moore-Penrose inverse, via full-rank factorization:
//   a = f g,  pinv(a) = star(g) (star(f) a star(g))^-1 star(f)
// ---------------------------------------------------------------------------

inline Matrix pinv(const Matrix& a) {
    auto [f, g, r] = rankFactorize(a);
    if (r == 0) return Matrix(a.cols(), a.rows(), a.field());
    Matrix core = f.star() * a * g.star();
    auto ci = inverse(core);
    if (!ci)
        throw SingularCore("core F*AG* singular; the scalar domain is not proper for " + a.str());
    return g.star() * (*ci) * f.star();
}

// ---------------------------------------------------------------------------
// Rickart prime operations (for *-regular rings):
//   leftPrime  a` = 1 - a pinv(a)      rightPrime  a' = 1 - pinv(a) a
//   leftDouble a`` = a pinv(a)         rightDouble a'' = pinv(a) a
// ---------------------------------------------------------------------------

struct PrimeQuadruple {
    Projection leftPrime;
    Projection rightPrime;
    Projection leftDouble;
    Projection rightDouble;
};

inline PrimeQuadruple primes(const Matrix& a) {
    if (!a.isSquare()) throw ShapeMismatch("primes require a square matrix, got " + a.shapeStr());
    Matrix d = pinv(a);
    Matrix one = Matrix::identity(a.rows(), a.field());
    Matrix leftDouble = a * d;
    Matrix rightDouble = d * a;
    return {certifyProjection(one - leftDouble), certifyProjection(one - rightDouble),
            certifyProjection(leftDouble), certifyProjection(rightDouble)};
}

enum class Side { Left, Right };

// Independent elimination-based annihilator basis, decoupled from pinv.
// Left: rows span {y : y a = 0}. Right: columns span {z : a z = 0}.
inline Matrix annihilatorOracle(const Matrix& a, Side side) {
    if (!a.isSquare()) throw ShapeMismatch("annihilator oracle expects a square matrix");
    if (side == Side::Right) return nullspaceBasis(a);
    return nullspaceBasis(a.star()).star();
}

} // namespace rickart
