#pragma once

#include <array>
#include <map>
#include <optional>

#include "star_ring.hpp"

namespace rickart {

enum class Formulation {
    RangeInclusion,        // star equation + range/row-space inclusion
    Existential,           // star equation + one-sided multiplier
    PrimeForm,             // b a'' = a = a b'' (right) / a`` b = a = b`` a (left)
    StarEqPlusProjection,  // star equation + a'' <= b'' (resp. a`` <= b``)
    IdempotentWitness,     // star equation + canonical idempotent witness
};

inline const std::array<Formulation, 5>& allFormulations() {
    static const std::array<Formulation, 5> fs = {
        Formulation::RangeInclusion, Formulation::Existential, Formulation::PrimeForm,
        Formulation::StarEqPlusProjection, Formulation::IdempotentWitness};
    return fs;
}

inline std::string formulationName(Formulation f) {
    switch (f) {
        case Formulation::RangeInclusion: return "range";
        case Formulation::Existential: return "exist";
        case Formulation::PrimeForm: return "prime";
        case Formulation::StarEqPlusProjection: return "stareq";
        case Formulation::IdempotentWitness: return "witness";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Range inclusion, evaluated three ways with an agreement assertion.
//   side Right:  aR <= bR   (column spaces, a = b x)
//   side Left:   Ra <= Rb   (row spaces,    a = y b)
// The prime-operation route needs square matrices and is skipped otherwise.
// ---------------------------------------------------------------------------

inline bool rangeLe(const Matrix& a, const Matrix& b, Side side) {
    a.checkSameShape(b, "rangeLe");
    bool viaRank, viaSolve;
    if (side == Side::Right) {
        viaRank = rank(hstack(b, a)) == rank(b);
        viaSolve = solve(b, a).has_value();
    } else {
        viaRank = rank(vstack(b, a)) == rank(b);
        viaSolve = solve(b.star(), a.star()).has_value(); // a = y b  iff  b* y* = a*
    }
    if (viaRank != viaSolve)
        throw InternalDisagreement("rank and solvability routes disagree in rangeLe");
    if (a.isSquare()) {
        bool viaPrimes = side == Side::Right ? primes(b).leftDouble.matrix() * a == a
                                             : a * primes(b).rightDouble.matrix() == a;
        if (viaPrimes != viaRank)
            throw InternalDisagreement("prime-operation route disagrees in rangeLe");
    }
    return viaRank;
}

// ---------------------------------------------------------------------------
// Star equations.
//   side Right:  a a* = b a*     side Left:  a* a = a* b
// For square inputs the equivalent prime form (a = b a'' resp. a = a`` b)
// is evaluated too and must agree.
// ---------------------------------------------------------------------------

inline bool starEq(const Matrix& a, const Matrix& b, Side side) {
    a.checkSameShape(b, "starEq");
    bool direct = side == Side::Right ? a * a.star() == b * a.star() : a.star() * a == a.star() * b;
    if (a.isSquare()) {
        auto pq = primes(a);
        bool viaPrimes = side == Side::Right ? b * pq.rightDouble.matrix() == a
                                             : pq.leftDouble.matrix() * b == a;
        if (viaPrimes != direct)
            throw InternalDisagreement("star equation disagrees with its prime form");
    }
    return direct;
}

// ---------------------------------------------------------------------------
// Idempotent-witness formulation. For the right order the canonical
// witness for the multiplier half is p = a pinv(b): when the order holds,
// p is idempotent, a = p b, and p has the same left annihilator as a.
// (The projection a'' witnesses the star-equation half via a = b a''.)
// Mirrored with q = pinv(b) a for the left order.
// ---------------------------------------------------------------------------

struct WitnessResult {
    bool holds;
    std::optional<Matrix> witness;
    std::string detail;
};

namespace detail {

// span equality of annihilator spaces: every generator of one side
// annihilates through membership in the other
inline bool sameAnnihilator(const Matrix& u, const Matrix& v, Side side) {
    Matrix au = annihilatorOracle(u, side);
    Matrix av = annihilatorOracle(v, side);
    if (side == Side::Right)
        return rank(au) == rank(av) && rank(hstack(au, av)) == rank(au);
    return rank(au) == rank(av) && rank(vstack(au, av)) == rank(au);
}

} // namespace detail

inline WitnessResult witnessCheck(const Matrix& a, const Matrix& b, Side side) {
    a.checkSameShape(b, "witnessCheck");
    if (!a.isSquare()) throw ShapeMismatch("witnessCheck expects square matrices");
    if (!starEq(a, b, side))
        return {false, std::nullopt, "star equation fails"};
    if (side == Side::Right) {
        Matrix p = a * pinv(b);
        if (p * b != a) return {false, p, "a = p b fails for proposed witness p = a pinv(b)"};
        if (p * p != p) return {false, p, "proposed witness is not idempotent"};
        if (!detail::sameAnnihilator(p, a, Side::Left))
            return {false, p, "left annihilators of witness and a differ"};
        return {true, p, "right order witnessed by idempotent a pinv(b)"};
    }
    Matrix q = pinv(b) * a;
    if (b * q != a) return {false, q, "a = b q fails for proposed witness q = pinv(b) a"};
    if (q * q != q) return {false, q, "proposed witness is not idempotent"};
    if (!detail::sameAnnihilator(q, a, Side::Right))
        return {false, q, "right annihilators of witness and a differ"};
    return {true, q, "left order witnessed by idempotent pinv(b) a"};
}

// ---------------------------------------------------------------------------
// The one-sided star orders, in every formulation
// ---------------------------------------------------------------------------

inline bool rightStarLe(const Matrix& a, const Matrix& b, Formulation f) {
    a.checkSameShape(b, "rightStarLe");
    if (!a.isSquare()) throw ShapeMismatch("ring order predicates expect square matrices");
    switch (f) {
        case Formulation::PrimeForm: {
            Matrix add = primes(a).rightDouble.matrix();
            Matrix bdd = primes(b).rightDouble.matrix();
            return b * add == a && a * bdd == a;
        }
        case Formulation::StarEqPlusProjection:
            return starEq(a, b, Side::Right) &&
                   projLe(primes(a).rightDouble, primes(b).rightDouble);
        case Formulation::RangeInclusion:
            // row-space inclusion Ra <= Rb, i.e. ran(a*) <= ran(b*)
            return starEq(a, b, Side::Right) && rangeLe(a, b, Side::Left);
        case Formulation::Existential:
            return starEq(a, b, Side::Right) && solve(b.star(), a.star()).has_value();
        case Formulation::IdempotentWitness:
            return witnessCheck(a, b, Side::Right).holds;
    }
    throw Error("unreachable formulation");
}

inline bool leftStarLe(const Matrix& a, const Matrix& b, Formulation f) {
    a.checkSameShape(b, "leftStarLe");
    if (!a.isSquare()) throw ShapeMismatch("ring order predicates expect square matrices");
    switch (f) {
        case Formulation::PrimeForm: {
            Matrix all = primes(a).leftDouble.matrix();
            Matrix bll = primes(b).leftDouble.matrix();
            return all * b == a && bll * a == a;
        }
        case Formulation::StarEqPlusProjection:
            return starEq(a, b, Side::Left) && projLe(primes(a).leftDouble, primes(b).leftDouble);
        case Formulation::RangeInclusion:
            // column-space inclusion ran(a) <= ran(b)
            return starEq(a, b, Side::Left) && rangeLe(a, b, Side::Right);
        case Formulation::Existential:
            return starEq(a, b, Side::Left) && solve(b, a).has_value();
        case Formulation::IdempotentWitness:
            return witnessCheck(a, b, Side::Left).holds;
    }
    throw Error("unreachable formulation");
}

inline bool starLe(const Matrix& a, const Matrix& b, Side side, Formulation f) {
    return side == Side::Right ? rightStarLe(a, b, f) : leftStarLe(a, b, f);
}

// ---------------------------------------------------------------------------
// Cross-formulation agreement (must hold on regular rings)
// ---------------------------------------------------------------------------

struct OrderReport {
    Side side;
    std::map<Formulation, bool> verdicts;
    bool agreed;
    bool holds() const { return verdicts.begin()->second; }
};

inline OrderReport equivalenceReport(const Matrix& a, const Matrix& b, Side side) {
    OrderReport r{side, {}, true};
    for (Formulation f : allFormulations()) r.verdicts[f] = starLe(a, b, side, f);
    for (const auto& [f, v] : r.verdicts)
        if (v != r.verdicts.begin()->second) r.agreed = false;
    return r;
}

} // namespace rickart
