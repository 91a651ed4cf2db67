#include <doctest.h>

#include "rickart/harness.hpp"

using namespace rickart;

namespace {

RingUniverse f3Universe() {
    return {makeRing(FieldDescriptor::fp(3), 2), RingUniverse::Mode::Exhaustive, 0, 0, 0};
}

RingUniverse qiUniverse(std::size_t n, std::size_t count, std::uint64_t seed = 1) {
    return {makeRing(FieldDescriptor::qi(), n), RingUniverse::Mode::Sampled, count, seed, 3};
}

} // namespace

TEST_CASE("enumeration sizes and order") {
    CHECK(enumerateMatrices(FieldDescriptor::fp(3), 1, 1).size() == 3);
    CHECK(enumerateMatrices(FieldDescriptor::fp(7), 1, 1).size() == 7);
    auto all = enumerateMatrices(FieldDescriptor::fp(3), 2, 2);
    REQUIRE(all.size() == 81);
    CHECK(all.front().isZero());
    for (std::size_t k = 1; k < all.size(); ++k) CHECK(all[k - 1] < all[k]); // lexicographic
}

TEST_CASE("sampling is deterministic in (seed, index)") {
    RingUniverse u = qiUniverse(3, 10);
    CHECK(sampleMatrix(u, 4) == sampleMatrix(u, 4));
    CHECK(sampleMatrix(u, 4) != sampleMatrix(u, 5));
    RingUniverse u2 = qiUniverse(3, 10, 2);
    CHECK(sampleMatrix(u, 4) != sampleMatrix(u2, 4));
    // entry bound respected
    for (std::uint64_t k = 0; k < 20; ++k) {
        Matrix m = sampleMatrix(u, k);
        for (const Scalar& s : m.entries()) {
            CHECK(abs(numerator(s.asQi().re)) <= 3 * denominator(s.asQi().re));
            CHECK(denominator(s.asQi().re) <= 3);
        }
    }
}

TEST_CASE("brute-force poset oracle on a chain and an antichain") {
    // chain 0 < e < 1 encoded abstractly
    auto chainRel = [](std::size_t i, std::size_t j) { return i <= j; };
    PosetTable chain = bruteForcePosetOps(3, chainRel);
    CHECK(chain.covers == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
    CHECK(chain.meet[0][2] == 0);
    CHECK(chain.join[0][2] == 2);
    CHECK(chain.least == 0);
    CHECK(chain.maximal == std::vector<std::size_t>{2});

    // two incomparable elements above a bottom, no top: join absent
    auto vRel = [](std::size_t i, std::size_t j) { return i == j || i == 0; };
    PosetTable v = bruteForcePosetOps(3, vRel);
    CHECK(v.join[1][2] == -1);
    CHECK(v.meet[1][2] == 0);
    CHECK(v.maximal.size() == 2);
}

TEST_CASE("suite dispatch") {
    CHECK_THROWS_AS(runSuite("no-such-suite", f3Universe()), UnknownSuite);
    SuiteReport r = runSuite("penrose", f3Universe());
    CHECK(r.suite == "penrose");
    CHECK(r.cases == 81);
    CHECK(r.ok());
    // identical config gives identical report modulo wall time
    SuiteReport r2 = runSuite("penrose", f3Universe());
    CHECK(r2.cases == r.cases);
    CHECK(r2.failures.empty());
}

TEST_CASE("sampled suites run clean on Q(i)") {
    CHECK(runSuite("penrose", qiUniverse(2, 50)).ok());
    CHECK(runSuite("primes", qiUniverse(2, 30)).ok());
    CHECK(runSuite("order-axioms", qiUniverse(2, 30)).ok());
    CHECK(runSuite("equivalence", qiUniverse(2, 30)).ok());
    CHECK(runSuite("iso", qiUniverse(2, 30)).ok());
    CHECK(runSuite("meetjoin", qiUniverse(2, 20)).ok());
}

TEST_CASE("suite report serialization") {
    SuiteReport r = runSuite("penrose", qiUniverse(2, 5));
    nlohmann::json j = r.toJson();
    CHECK(j["suite"] == "penrose");
    CHECK(j["cases"] == 5);
    CHECK(j["failures"].is_array());
    CHECK(j["seconds"].is_number());
}

TEST_CASE("failures carry shrunken counterexamples") {
    // deliberately broken property: claims every 2x2 Q(i) sample is invertible
    SuiteRunner s("demo");
    RingUniverse u = qiUniverse(2, 1);
    Matrix singular(2, 2, u.descriptor.field);
    singular.at(0, 0) = Scalar::one(u.descriptor.field);
    singular.at(0, 1) = Scalar::one(u.descriptor.field);
    singular.at(1, 0) = Scalar::one(u.descriptor.field);
    singular.at(1, 1) = Scalar::one(u.descriptor.field);
    s.check("invertibility", {singular},
            [](const std::vector<Matrix>& in) { return inverse(in[0]).has_value(); });
    REQUIRE(s.report().failures.size() == 1);
    const auto& f = s.report().failures[0];
    CHECK(f.property == "invertibility");
    // the recorded counterexample still exhibits the failure
    Matrix back = matrixFromJson(f.inputs[0]);
    CHECK(!inverse(back).has_value());

    // a rank-one failure shrinks all the way to a single nonzero entry
    Matrix sparse(2, 2, u.descriptor.field);
    sparse.at(0, 0) = Scalar::one(u.descriptor.field);
    sparse.at(1, 1) = Scalar::one(u.descriptor.field);
    SuiteRunner s2("demo2");
    s2.check("always fails", {sparse}, [](const std::vector<Matrix>&) { return false; });
    CHECK(matrixFromJson(s2.report().failures[0].inputs[0]).isZero());
}
