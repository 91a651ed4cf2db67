#include <doctest.h>

#include "rickart/enumeration.hpp"
#include "rickart/linalg.hpp"

using namespace rickart;

namespace {

const FieldDescriptor kQi = FieldDescriptor::qi();

Matrix qiMat(std::size_t rows, std::size_t cols, std::initializer_list<const char*> entries) {
    Matrix m(rows, cols, kQi);
    auto it = entries.begin();
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar::parse(*it++, kQi);
    return m;
}

} // namespace

TEST_CASE("conjugate transpose") {
    Matrix a = qiMat(2, 2, {"1+1i", "0", "2", "0+3i"});
    Matrix expected = qiMat(2, 2, {"1-1i", "2", "0", "0-3i"});
    CHECK(a.star() == expected);
    CHECK(a.star().star() == a);

    Matrix r = qiMat(2, 3, {"1", "2", "3", "4", "5", "6"});
    CHECK(r.star().rows() == 3);
    CHECK(r.star().cols() == 2);

    Matrix b = qiMat(2, 2, {"0-2i", "1", "1/2", "5"});
    CHECK((a * b).star() == b.star() * a.star());
}

TEST_CASE("arithmetic shape and field guards") {
    Matrix a = qiMat(2, 2, {"1", "0", "0", "1"});
    Matrix r = qiMat(2, 3, {"1", "2", "3", "4", "5", "6"});
    CHECK_THROWS_AS(a + r, ShapeMismatch);
    CHECK_THROWS_AS(r * r, ShapeMismatch);
    Matrix f3 = Matrix::identity(2, FieldDescriptor::fp(3));
    CHECK_THROWS_AS(a + f3, FieldMismatch);
}

TEST_CASE("rank factorization examples") {
    Matrix zero(2, 2, kQi);
    CHECK(rankFactorize(zero).rank == 0);

    Matrix id = Matrix::identity(2, kQi);
    auto fid = rankFactorize(id);
    CHECK(fid.rank == 2);
    CHECK(fid.f * fid.g == id);

    Matrix a = qiMat(2, 2, {"1", "0", "1", "0"});
    auto fa = rankFactorize(a);
    CHECK(fa.rank == 1);
    CHECK(fa.f * fa.g == a);
    CHECK(rank(fa.f) == 1);
    CHECK(rank(fa.g) == 1);
}

TEST_CASE("rank factorization property over random matrices") {
    for (std::uint64_t k = 0; k < 200; ++k) {
        Matrix a = sampleQiMatrix(3, 3, 5, k, 2);
        auto [f, g, r] = rankFactorize(a);
        CHECK(f * g == a);
        CHECK(r == rank(a));
        CHECK(rank(f) == r);
        CHECK(rank(g) == r);
    }
    for (const Matrix& a : enumerateMatrices(FieldDescriptor::fp(3), 2, 2)) {
        auto [f, g, r] = rankFactorize(a);
        CHECK(f * g == a);
        CHECK(r == rank(a));
    }
}

TEST_CASE("nullspace and column space") {
    Matrix a = qiMat(2, 2, {"1", "0", "1", "0"});
    Matrix ns = nullspaceBasis(a);
    CHECK(ns.cols() == 1);
    CHECK((a * ns).isZero());
    CHECK(ns.at(1, 0) == Scalar::one(kQi));

    Matrix cs = columnSpaceBasis(a);
    CHECK(cs.cols() == 1);
    CHECK(cs.at(0, 0) == Scalar::one(kQi));
    CHECK(cs.at(1, 0) == Scalar::one(kQi));

    CHECK(columnSpaceBasis(Matrix(2, 2, kQi)).cols() == 0);
    CHECK(columnSpaceBasis(Matrix::identity(2, kQi)).cols() == 2);

    for (std::uint64_t k = 0; k < 100; ++k) {
        Matrix m = sampleQiMatrix(3, 4, 9, k, 2);
        Matrix nsb = nullspaceBasis(m);
        CHECK((m * nsb).isZero());
        CHECK(rank(nsb) == nsb.cols());
        CHECK(nsb.cols() + rank(m) == m.cols());
    }
}

TEST_CASE("solve and inverse") {
    Matrix a = qiMat(2, 2, {"1", "1", "0", "1"});
    Matrix b = qiMat(2, 1, {"3", "1"});
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);

    Matrix singular = qiMat(2, 2, {"1", "0", "1", "0"});
    CHECK(!solve(singular, qiMat(2, 1, {"0", "1"})).has_value());
    CHECK(solve(singular, qiMat(2, 1, {"1", "1"})).has_value());

    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(a * *inv == Matrix::identity(2, kQi));
    CHECK(!inverse(singular).has_value());
}
