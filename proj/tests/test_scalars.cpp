#include <doctest.h>

#include <random>

#include "rickart/scalar.hpp"

using namespace rickart;

namespace {

Scalar qi(int reN, int reD, int imN, int imD) {
    return Scalar(GaussianRational{Rational(reN, reD), Rational(imN, imD)});
}

Scalar f3(int v) { return Scalar(FpElement{v, 3}); }

Scalar randomQi(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 5);
    return qi(num(rng), den(rng), num(rng), den(rng));
}

} // namespace

TEST_CASE("conjugation") {
    CHECK(qi(3, 2, 5, 1).conjugate() == qi(3, 2, -5, 1));
    CHECK(qi(0, 1, 0, 1).conjugate() == qi(0, 1, 0, 1));
    CHECK(f3(2).conjugate() == f3(2)); // identity involution
}

TEST_CASE("scalar inversion") {
    // (1/2 + 1/2 i)^-1 = 1 - i
    Scalar s = qi(1, 2, 1, 2);
    CHECK(s.invert() == qi(1, 1, -1, 1));
    CHECK(s * s.invert() == Scalar::one(FieldDescriptor::qi()));
    CHECK(f3(2).invert() == f3(2)); // 2*2 = 4 = 1 mod 3
    CHECK(Scalar::one(FieldDescriptor::qi()).invert() == Scalar::one(FieldDescriptor::qi()));
    CHECK_THROWS_AS(Scalar::zero(FieldDescriptor::qi()).invert(), DivisionByZero);
    CHECK_THROWS_AS(Scalar::zero(FieldDescriptor::fp(3)).invert(), DivisionByZero);
}

TEST_CASE("normSquare positivity") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 300; ++k) {
        Scalar z = randomQi(rng);
        Rational n = z.asQi().normSquare();
        CHECK(n >= 0);
        CHECK((n == 0) == z.isZero());
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(11);
    FieldDescriptor qiF = FieldDescriptor::qi();
    for (int k = 0; k < 200; ++k) {
        Scalar a = randomQi(rng), b = randomQi(rng), c = randomQi(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Scalar::zero(qiF));
        if (!a.isZero()) CHECK(a * a.invert() == Scalar::one(qiF));
        // conjugation is an involutive automorphism
        CHECK(a.conjugate().conjugate() == a);
        CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
        CHECK((a * b).conjugate() == b.conjugate() * a.conjugate());
    }
    for (int p : {3, 7, 11}) {
        FieldDescriptor f = FieldDescriptor::fp(p);
        for (int x = 0; x < p; ++x)
            for (int y = 0; y < p; ++y) {
                Scalar a(FpElement{x, p}), b(FpElement{y, p});
                CHECK(a * b == b * a);
                if (!a.isZero()) CHECK(a * a.invert() == Scalar::one(f));
            }
    }
}

TEST_CASE("text grammar round trips and rejections") {
    FieldDescriptor qiF = FieldDescriptor::qi();
    for (const char* txt : {"-3", "5/2", "1/2+3/4i", "0-1i", "0", "-7/3-2/5i"}) {
        Scalar s = Scalar::parse(txt, qiF);
        CHECK(Scalar::parse(s.str(), qiF) == s);
        CHECK(s.str() == txt);
    }
    CHECK_THROWS_AS(Scalar::parse("1/0", qiF), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1/-2", qiF), ParseError);
    CHECK_THROWS_AS(Scalar::parse("", qiF), ParseError);
    CHECK_THROWS_AS(Scalar::parse("i", qiF), ParseError);
    FieldDescriptor f3d = FieldDescriptor::fp(3);
    CHECK(Scalar::parse("2", f3d) == f3(2));
    CHECK_THROWS_AS(Scalar::parse("3", f3d), ParseError);  // non-canonical
    CHECK_THROWS_AS(Scalar::parse("-1", f3d), ParseError); // non-canonical
    CHECK_THROWS_AS(Scalar::parse("1/2", f3d), ParseError);
    CHECK_THROWS_AS(FieldDescriptor::fp(4), ParseError);
}
