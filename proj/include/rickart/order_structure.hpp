#pragma once

#include <algorithm>
#include <vector>

#include "orders.hpp"

namespace rickart {

enum class Ternary { False, True, Unknown };

// phi(a) = a'': the projection side of the interval isomorphism.
inline Projection phi(const Matrix& a) { return primes(a).rightDouble; }

// psi_x(e) = x e, for e <= x''.
inline Matrix psi(const Matrix& x, const Projection& e) {
    if (!projLe(e, phi(x)))
        throw PreconditionViolated("psi requires e <= x''");
    return x * e.matrix();
}

inline void requireBelow(const Matrix& a, const Matrix& x, const std::string& who) {
    if (!rightStarLe(a, x, Formulation::PrimeForm))
        throw PreconditionViolated(who + " requires the argument to lie below the bound");
}

// Meet of a and b inside [0, x]: x (a'' /\ b''). By the bounded-pair
// theorem this is the greatest lower bound in the whole ring.
inline Matrix segmentMeet(const Matrix& x, const Matrix& a, const Matrix& b) {
    requireBelow(a, x, "segmentMeet");
    requireBelow(b, x, "segmentMeet");
    return x * projMeet(phi(a), phi(b)).matrix();
}

// Join of a and b inside [0, x]: x (a'' \/ b''); the least upper bound
// in the whole ring as well.
inline Matrix segmentJoin(const Matrix& x, const Matrix& a, const Matrix& b) {
    requireBelow(a, x, "segmentJoin");
    requireBelow(b, x, "segmentJoin");
    return x * projJoin(phi(a), phi(b)).matrix();
}

// Orthocomplement of a in [0, x] is x - a.
inline Matrix segmentOrtho(const Matrix& x, const Matrix& a) {
    requireBelow(a, x, "segmentOrtho");
    return x - a;
}

// Bound-free meet of a bounded pair: a (a'' /\ b''), which must coincide
// with b (a'' /\ b''). The caller is responsible for the existence of a
// common upper bound (see upperBoundExists).
inline Matrix boundedMeet(const Matrix& a, const Matrix& b) {
    Matrix m = projMeet(phi(a), phi(b)).matrix();
    Matrix viaA = a * m;
    Matrix viaB = b * m;
    if (viaA != viaB)
        throw PreconditionViolated("a(a''/\\b'') != b(a''/\\b''): the pair is not bounded");
    return viaA;
}

struct BoundVerdict {
    Ternary exists;
    std::optional<Matrix> witness;
};

inline BoundVerdict upperBoundExists(const Matrix& a, const Matrix& b) {
    a.checkSameShape(b, "upperBoundExists");
    RingDescriptor d = ringOf(a);
    if (rightStarLe(a, b, Formulation::PrimeForm)) return {Ternary::True, b};
    if (rightStarLe(b, a, Formulation::PrimeForm)) return {Ternary::True, a};
    if (!d.enumerable) return {Ternary::Unknown, std::nullopt};
    for (const Matrix& x : enumerateMatrices(d.field, d.size, d.size))
        if (rightStarLe(a, x, Formulation::PrimeForm) &&
            rightStarLe(b, x, Formulation::PrimeForm))
            return {Ternary::True, x};
    return {Ternary::False, std::nullopt};
}

inline Ternary isMaximal(const Matrix& a) {
    RingDescriptor d = ringOf(a);
    if (d.enumerable) {
        for (const Matrix& z : enumerateMatrices(d.field, d.size, d.size))
            if (z != a && rightStarLe(a, z, Formulation::PrimeForm)) return Ternary::False;
        return Ternary::True;
    }
    // left invertible iff full column rank; such elements are maximal
    if (rank(a) == a.rows()) return Ternary::True;
    return Ternary::Unknown;
}

inline std::vector<Matrix> enumerateProjections(const RingDescriptor& d) {
    if (!d.enumerable) throw NotEnumerable("projection enumeration needs an enumerable ring");
    std::vector<Matrix> out;
    for (const Matrix& e : enumerateMatrices(d.field, d.size, d.size))
        if (e * e == e && e.star() == e) out.push_back(e);
    return out;
}

// {x e : e in P, e <= x''} = [0, x], sorted canonically.
inline std::vector<Matrix> initialSegment(const Matrix& x) {
    RingDescriptor d = ringOf(x);
    if (!d.enumerable) throw NotEnumerable("initialSegment needs an enumerable ring");
    Projection xdd = phi(x);
    std::vector<Matrix> seg;
    for (const Matrix& e : enumerateProjections(d))
        if (projLe(certifyProjection(e), xdd)) seg.push_back(x * e);
    std::sort(seg.begin(), seg.end());
    seg.erase(std::unique(seg.begin(), seg.end()), seg.end());
    return seg;
}

} // namespace rickart
