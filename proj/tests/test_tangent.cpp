#include <doctest.h>

#include "borderlab/fixtures.hpp"
#include "borderlab/parallel.hpp"
#include "borderlab/tangent.hpp"

using namespace borderlab;

TEST_CASE("one point on the affine plane: tangent dimension 2") {
    auto O = std::make_shared<const OrderIdealData>(
        OrderIdealData::fromMonomials(2, {Monomial::one(2)}));
    auto I0 = monomialIdeal(O);
    auto syzygies = linearSyzygyBasis(I0);
    REQUIRE(syzygies.size() == 1);
    TangentSystem sys = tangentRelations(I0, syzygies);
    CHECK(sys.relations.rows() == 1);
    CHECK(sys.relations.cols() == 2);
    auto rep = tangentSpaceDimension(I0, Field::Q());
    CHECK(rep.dimension == 2);
}

TEST_CASE("row and variable counts for the running example") {
    auto I = buildNamedExample("running-3-2-1");
    auto syzygies = linearSyzygyBasis(I);
    TangentSystem sys = tangentRelations(I, syzygies);
    CHECK(sys.relations.rows() == syzygies.size() * I.mu());
    CHECK(sys.relations.cols() == I.mu() * I.nu());
    CHECK(syzygies.size() == 13);  // psi = 4*9 - 23, frozen from enumeration

    // per-degree relation counts match a brute-force histogram of row degrees
    auto counts = relationCountsByDegree(I);
    std::map<long, std::size_t> histogram;
    for (long d : sys.degreeOfRow) histogram[d]++;
    CHECK(histogram == counts);
}

TEST_CASE("per-degree relation counts for a shape ideal") {
    auto I = buildShapeIdeal(ShapeParams(5, 2, 2, 3), CoefficientSource(SeededCoefficients{3}));
    auto counts = relationCountsByDegree(I);
    std::size_t psi = predictedSyzygyCount(I);
    // degree s count is psi * tau
    CHECK(counts[3] == psi * I.tau());
    std::size_t total = 0;
    for (const auto& [d, c] : counts) total += c;
    CHECK(total == psi * I.mu());

    auto syzygies = linearSyzygyBasis(I);
    TangentSystem sys = tangentRelations(I, syzygies);
    std::map<long, std::size_t> histogram;
    for (long d : sys.degreeOfRow) histogram[d]++;
    CHECK(histogram == counts);
}

TEST_CASE("tangent dimension via linear basis equals neighbor-syzygy route") {
    // small instances only: mu*nu <= 600
    auto I = buildNamedExample("running-3-2-1");
    REQUIRE(I.mu() * I.nu() <= 600);
    auto viaBasis = tangentSpaceDimension(I, Field::Q(), false);
    auto viaNeighbors = tangentSpaceDimension(I, Field::Q(), true);
    CHECK(viaBasis.dimension == viaNeighbors.dimension);
    CHECK(viaBasis.rank == viaNeighbors.rank);

    auto O = std::make_shared<const OrderIdealData>(
        lexSegmentComplementFromHilbert(3, {1, 3, 2, 0}));
    std::vector<Monomial> lm = {Monomial::parse("x1^2", 3), Monomial::parse("x1*x2", 3),
                                Monomial::parse("x1*x3", 3), Monomial::parse("x2^2", 3)};
    std::vector<Monomial> tm = {Monomial::parse("x2*x3", 3), Monomial::parse("x3^2", 3)};
    auto I0 = buildDistinguishedIdeal(O, lm, tm, CoefficientSource(ExplicitCoefficients{}));
    CHECK(tangentSpaceDimension(I0, Field::Q(), false).dimension ==
          tangentSpaceDimension(I0, Field::Q(), true).dimension);
}

TEST_CASE("GF(p) dimension bounds the rational dimension from above") {
    for (std::uint64_t seed : {1ull, 4ull}) {
        auto I = buildShapeIdeal(ShapeParams(4, 2, 2, 3),
                                 CoefficientSource(SeededCoefficients{seed}));
        auto overQ = tangentSpaceDimension(I, Field::Q());
        auto overP = tangentSpaceDimension(I, Field::GF(32713));
        CHECK(overP.dimension >= overQ.dimension);
        auto overTiny = tangentSpaceDimension(I, Field::GF(2));
        CHECK(overTiny.dimension >= overQ.dimension);
    }
}

TEST_CASE("default field switches to GF(32713) above 2000 unknowns") {
    CHECK(defaultField(2000).rational);
    CHECK_FALSE(defaultField(2001).rational);
    CHECK(defaultField(2001).prime == 32713);
}

TEST_CASE("parallelFor fills every slot deterministically") {
    std::vector<std::size_t> out(257, 0);
    parallelFor(out.size(), [&](std::size_t i) { out[i] = i * i + 1; }, 3);
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == i * i + 1);
    std::vector<std::size_t> serial(257, 0);
    parallelFor(serial.size(), [&](std::size_t i) { serial[i] = i * i + 1; }, 1);
    CHECK(out == serial);
}

TEST_CASE("tangent kernel vectors satisfy every relation row") {
    auto I = buildShapeIdeal(ShapeParams(4, 2, 2, 3), CoefficientSource(SeededCoefficients{8}));
    auto syzygies = linearSyzygyBasis(I);
    TangentSystem sys = tangentRelations(I, syzygies);
    auto kernel = kernelBasisRational(sys.relations);
    CHECK(kernel.size() == I.mu() * I.nu() - rankExact(sys.relations));
    for (const auto& v : kernel) {
        for (std::size_t r = 0; r < sys.relations.rows(); ++r) {
            mpq_class acc = 0;
            for (const auto& [c, val] : sys.relations.row(r)) acc += val * v[c];
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("shape-generic ideals have no tangent coordinates below degree r-1") {
    // the published (5,2,2,3) ideal is shape-generic (dim = L = 59); every
    // kernel vector must vanish on unknowns of degree <= r-2 = 0
    auto I = buildNamedExample("d-5-2-2-3");
    auto syzygies = linearSyzygyBasis(I);
    TangentSystem sys = tangentRelations(I, syzygies);
    auto kernel = kernelBasisRational(sys.relations);
    REQUIRE(kernel.size() == 59);
    for (const auto& v : kernel) {
        for (std::size_t col = 0; col < v.size(); ++col) {
            if (sys.degreeOfVar[col] <= 0) CHECK(v[col] == 0);
        }
    }
}
