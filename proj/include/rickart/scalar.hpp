#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <compare>
#include <string>
#include <variant>

#include "errors.hpp"

namespace rickart {

using Integer = boost::multiprecision::cpp_int;
// Canonical reduced form with positive denominator is maintained by the
// backend; equality is structural.
using Rational = boost::multiprecision::cpp_rational;

inline bool isPrime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Field descriptors
// ---------------------------------------------------------------------------

struct FieldDescriptor {
    enum class Kind { GaussianRationals, PrimeField };

    Kind kind = Kind::GaussianRationals;
    std::int64_t p = 0; // modulus, PrimeField only

    static FieldDescriptor qi() { return {Kind::GaussianRationals, 0}; }

    static FieldDescriptor fp(std::int64_t p) {
        if (!isPrime(p)) throw ParseError("F_p requires a prime modulus, got " + std::to_string(p));
        return {Kind::PrimeField, p};
    }

    bool operator==(const FieldDescriptor&) const = default;

    std::string str() const {
        return kind == Kind::GaussianRationals ? "Qi" : "F" + std::to_string(p);
    }
};

// ---------------------------------------------------------------------------
// Gaussian rationals
// ---------------------------------------------------------------------------

struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational re, Rational im) : re(std::move(re)), im(std::move(im)) {}

    bool isZero() const { return re == 0 && im == 0; }

    GaussianRational conjugate() const { return {re, -im}; }

    Rational normSquare() const { return re * re + im * im; }

    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }

    GaussianRational invert() const {
        if (isZero()) throw DivisionByZero("inverse of zero Gaussian rational");
        Rational n = normSquare();
        return {re / n, -im / n};
    }

    bool operator==(const GaussianRational&) const = default;
};

// ---------------------------------------------------------------------------
// Prime field elements
// ---------------------------------------------------------------------------

struct FpElement {
    std::int64_t value = 0; // canonical representative in [0, p)
    std::int64_t p = 0;

    FpElement() = default;
    FpElement(std::int64_t v, std::int64_t p) : value(((v % p) + p) % p), p(p) {}

    bool isZero() const { return value == 0; }

    FpElement operator+(const FpElement& o) const { return {value + o.value, p}; }
    FpElement operator-(const FpElement& o) const { return {value - o.value, p}; }
    FpElement operator-() const { return {-value, p}; }
    FpElement operator*(const FpElement& o) const { return {value * o.value, p}; }

    FpElement invert() const {
        if (value == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p));
        // extended Euclid
        std::int64_t a = value, b = p, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        return {x0, p};
    }

    bool operator==(const FpElement&) const = default;
};

// ---------------------------------------------------------------------------
// Scalar: a runtime-tagged field element
// ---------------------------------------------------------------------------

class Scalar {
public:
    Scalar() : value_(GaussianRational{}) {}
    explicit Scalar(GaussianRational g) : value_(std::move(g)) {}
    explicit Scalar(FpElement e) : value_(e) {}

    static Scalar zero(const FieldDescriptor& f) {
        if (f.kind == FieldDescriptor::Kind::GaussianRationals) return Scalar(GaussianRational{});
        return Scalar(FpElement{0, f.p});
    }

    static Scalar one(const FieldDescriptor& f) {
        if (f.kind == FieldDescriptor::Kind::GaussianRationals)
            return Scalar(GaussianRational{1, 0});
        return Scalar(FpElement{1, f.p});
    }

    static Scalar rational(Rational r) { return Scalar(GaussianRational{std::move(r), 0}); }

    FieldDescriptor field() const {
        if (std::holds_alternative<GaussianRational>(value_)) return FieldDescriptor::qi();
        return FieldDescriptor{FieldDescriptor::Kind::PrimeField, std::get<FpElement>(value_).p};
    }

    bool isZero() const {
        return std::visit([](const auto& v) { return v.isZero(); }, value_);
    }

    const GaussianRational& asQi() const { return std::get<GaussianRational>(value_); }
    const FpElement& asFp() const { return std::get<FpElement>(value_); }

    Scalar conjugate() const {
        if (auto* g = std::get_if<GaussianRational>(&value_)) return Scalar(g->conjugate());
        return *this; // identity involution on F_p
    }

    Scalar invert() const {
        return std::visit([](const auto& v) { return Scalar(v.invert()); }, value_);
    }

    Scalar operator+(const Scalar& o) const { return binop(o, [](auto& a, auto& b) { return a + b; }); }
    Scalar operator-(const Scalar& o) const { return binop(o, [](auto& a, auto& b) { return a - b; }); }
    Scalar operator*(const Scalar& o) const { return binop(o, [](auto& a, auto& b) { return a * b; }); }

    Scalar operator-() const {
        return std::visit([](const auto& v) { return Scalar(-v); }, value_);
    }

    bool operator==(const Scalar&) const = default;

    // Total order used only for canonical sorting and deterministic output.
    std::strong_ordering order(const Scalar& o) const {
        checkField(o);
        if (auto* g = std::get_if<GaussianRational>(&value_)) {
            const auto& h = o.asQi();
            if (g->re != h.re) return g->re < h.re ? std::strong_ordering::less : std::strong_ordering::greater;
            if (g->im != h.im) return g->im < h.im ? std::strong_ordering::less : std::strong_ordering::greater;
            return std::strong_ordering::equal;
        }
        return asFp().value <=> o.asFp().value;
    }

    std::string str() const;
    static Scalar parse(const std::string& text, const FieldDescriptor& f);

private:
    void checkField(const Scalar& o) const {
        if (field() != o.field())
            throw FieldMismatch("scalar fields differ: " + field().str() + " vs " + o.field().str());
    }

    template <class Op>
    Scalar binop(const Scalar& o, Op op) const {
        checkField(o);
        if (auto* g = std::get_if<GaussianRational>(&value_)) return Scalar(op(*g, o.asQi()));
        return Scalar(op(asFp(), o.asFp()));
    }

    std::variant<GaussianRational, FpElement> value_;
};

// ---------------------------------------------------------------------------
// Text grammar
//   RATIONAL := INT | INT "/" POSINT
//   GAUSSIAN := RATIONAL | RATIONAL SIGN RATIONAL "i"
//   FP       := canonical integer in [0, p)
// ---------------------------------------------------------------------------

namespace detail {

inline Rational parseRational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den <= 0) throw ParseError("denominator must be a positive integer: " + s);
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw ParseError("bad rational '" + s + "': " + e.what());
    }
}

inline std::string formatRational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

} // namespace detail

inline std::string Scalar::str() const {
    if (auto* g = std::get_if<GaussianRational>(&value_)) {
        if (g->im == 0) return detail::formatRational(g->re);
        std::string im = detail::formatRational(g->im);
        std::string sign = "+";
        if (im[0] == '-') {
            sign = "-";
            im = im.substr(1);
        }
        return detail::formatRational(g->re) + sign + im + "i";
    }
    return std::to_string(asFp().value);
}

inline Scalar Scalar::parse(const std::string& text, const FieldDescriptor& f) {
    if (text.empty()) throw ParseError("empty scalar");
    if (f.kind == FieldDescriptor::Kind::PrimeField) {
        std::size_t pos = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(text, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad F_p element '" + text + "'");
        }
        if (pos != text.size()) throw ParseError("bad F_p element '" + text + "'");
        if (v < 0 || v >= f.p)
            throw ParseError("non-canonical F_" + std::to_string(f.p) + " element '" + text + "'");
        return Scalar(FpElement{v, f.p});
    }
    // Gaussian rational: split at the SIGN separating the two parts, if any.
    // The separator is a '+' or '-' that is not the leading sign.
    if (text.back() == 'i') {
        std::string body = text.substr(0, text.size() - 1);
        std::size_t split = std::string::npos;
        for (std::size_t k = 1; k < body.size(); ++k)
            if (body[k] == '+' || body[k] == '-') split = k; // last such sign
        if (split == std::string::npos) throw ParseError("bad Gaussian rational '" + text + "'");
        Rational re = detail::parseRational(body.substr(0, split));
        Rational im = detail::parseRational(body.substr(split + 1));
        if (body[split] == '-') im = -im;
        return Scalar(GaussianRational{re, im});
    }
    return Scalar(GaussianRational{detail::parseRational(text), 0});
}

} // namespace rickart
