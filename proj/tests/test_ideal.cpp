#include <doctest.h>

#include "borderlab/fixtures.hpp"
#include "borderlab/ideal.hpp"
#include "borderlab/rng.hpp"

using namespace borderlab;

namespace {

std::shared_ptr<const OrderIdealData> runningO() {
    return std::make_shared<const OrderIdealData>(lexSegmentComplementFromHilbert(3, {1, 3, 2, 0}));
}

Polynomial randomPolynomial(SplitMix64& rng, std::size_t n, long maxDeg, int terms) {
    Polynomial f(n);
    for (int t = 0; t < terms; ++t) {
        std::vector<Monomial::Exp> e(n);
        long budget = maxDeg;
        for (auto& x : e) {
            x = static_cast<Monomial::Exp>(rng.next() % (budget + 1));
            budget -= x;
        }
        long num = static_cast<long>(rng.next() % 19) - 9;
        long den = 1 + static_cast<long>(rng.next() % 4);
        f.addTerm(Monomial(e), mpq_class(num, den));
    }
    return f;
}

}  // namespace

TEST_CASE("distinguished ideal construction on the running example") {
    auto O = runningO();
    std::vector<Monomial> lm = {Monomial::parse("x1^2", 3), Monomial::parse("x1*x2", 3),
                                Monomial::parse("x1*x3", 3), Monomial::parse("x2^2", 3)};
    std::vector<Monomial> tm = {Monomial::parse("x2*x3", 3), Monomial::parse("x3^2", 3)};
    auto I = buildDistinguishedIdeal(O, lm, tm, CoefficientSource(SeededCoefficients{5}));
    CHECK(I.lambda() == 4);
    CHECK(I.tau() == 2);
    CHECK(I.lambda() * I.tau() == 8);  // distinguished pairs

    SUBCASE("leading monomials must be minimal") {
        std::vector<Monomial> bad = {Monomial::parse("x1*x2*x3", 3)};
        CHECK_THROWS_WITH_AS(
            buildDistinguishedIdeal(O, bad, tm, CoefficientSource(SeededCoefficients{0})),
            doctest::Contains("leading monomial not minimal"), ValidationError);
    }
    SUBCASE("trailing monomials must be maximal") {
        std::vector<Monomial> bad = {Monomial::parse("x2", 3)};
        CHECK_THROWS_WITH_AS(
            buildDistinguishedIdeal(O, lm, bad, CoefficientSource(SeededCoefficients{0})),
            doctest::Contains("trailing monomial not maximal"), ValidationError);
    }
    SUBCASE("LM must avoid the border of TM") {
        // TM = {x1} makes x1^2 a border-of-trailing monomial
        std::vector<Monomial> lmBad = {Monomial::parse("x1^2", 3)};
        std::vector<Monomial> tmBad = {Monomial::parse("x1", 3)};
        CHECK_THROWS_WITH_AS(
            buildDistinguishedIdeal(O, lmBad, tmBad, CoefficientSource(SeededCoefficients{0})),
            doctest::Contains("overlap violation"), ValidationError);
    }
    SUBCASE("stray coefficient keys are schema errors") {
        ExplicitCoefficients coeffs;
        coeffs.values[{1, 1}] = 1;  // t_1 = 1 is not trailing
        CHECK_THROWS_AS(buildDistinguishedIdeal(O, lm, tm, CoefficientSource(coeffs)),
                        SchemaError);
    }
}

TEST_CASE("all-zero coefficients give the monomial ideal") {
    auto O = runningO();
    std::vector<Monomial> lm = {Monomial::parse("x1^2", 3), Monomial::parse("x1*x2", 3),
                                Monomial::parse("x1*x3", 3), Monomial::parse("x2^2", 3)};
    std::vector<Monomial> tm = {Monomial::parse("x2*x3", 3), Monomial::parse("x3^2", 3)};
    auto I0 = buildDistinguishedIdeal(O, lm, tm, CoefficientSource(ExplicitCoefficients{}));
    for (std::size_t j = 1; j <= I0.nu(); ++j) {
        CHECK(I0.generator(j).termCount() == 1);
        CHECK(I0.generator(j).leadingMonomial() == O->b(j));
    }
    CHECK(verifyBorderBasis(I0).isBorderBasis);
}

TEST_CASE("seeded generation is deterministic and respects the rng kind") {
    auto O = runningO();
    std::vector<Monomial> lm = {Monomial::parse("x1^2", 3), Monomial::parse("x1*x2", 3)};
    std::vector<Monomial> tm = {Monomial::parse("x2*x3", 3), Monomial::parse("x3^2", 3)};
    auto a = buildDistinguishedIdeal(O, lm, tm, CoefficientSource(SeededCoefficients{77}));
    auto b = buildDistinguishedIdeal(O, lm, tm, CoefficientSource(SeededCoefficients{77}));
    for (std::size_t j = 1; j <= a.nu(); ++j) CHECK(a.generator(j) == b.generator(j));

    SeededCoefficients bern{123, SeededCoefficients::Kind::bernoulli, 0.5};
    auto c = buildDistinguishedIdeal(O, lm, tm, CoefficientSource(bern));
    for (std::size_t j : c.leading()) {
        for (std::size_t i : c.trailing()) {
            auto v = c.coefficient(i, j);
            CHECK((v == 0 || v == 1));
        }
    }
}

TEST_CASE("normal form on the efficient running-example ideal") {
    auto I = buildNamedExample("running-3-2-1");
    const OrderIdealData& O = I.orderIdeal();

    SUBCASE("basis monomials are already reduced") {
        for (std::size_t i = 1; i <= O.mu(); ++i) {
            Polynomial t(O.t(i), 1);
            CHECK(normalForm(t, I) == t);
        }
    }
    SUBCASE("boundary monomials rewrite to their tails") {
        for (std::size_t j = 1; j <= O.nu(); ++j) {
            Polynomial b(O.b(j), 1);
            Polynomial nf = normalForm(b, I);
            Polynomial expected = Polynomial(O.b(j), 1) - I.generator(j);
            CHECK(nf == expected);
            if (!I.isLeading(j)) CHECK(nf.isZero());
        }
    }
    SUBCASE("the published reduction x2 g1 - x1 g2 -> 0") {
        Polynomial s = I.generator(1).timesMonomial(Monomial::parse("x2", 3)) -
                       I.generator(2).timesMonomial(Monomial::parse("x1", 3));
        CHECK(normalForm(s, I).isZero());
    }
}

TEST_CASE("normal form properties on random inputs") {
    auto I = buildNamedExample("d-5-2-2-3");
    SplitMix64 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial f = randomPolynomial(rng, 5, 5, 6);
        Polynomial g = randomPolynomial(rng, 5, 5, 6);
        Polynomial nf = normalForm(f, I);
        // supported on O
        for (const auto& [m, c] : nf.terms()) CHECK(I.orderIdeal().inBasis(m));
        // idempotent
        CHECK(normalForm(nf, I) == nf);
        // linear
        mpq_class a(static_cast<long>(rng.next() % 7) - 3, 1 + static_cast<long>(rng.next() % 3));
        mpq_class b(static_cast<long>(rng.next() % 7) - 3, 1);
        Polynomial lhs = normalForm(f.timesScalar(a) + g.timesScalar(b), I);
        Polynomial rhs = normalForm(f, I).timesScalar(a) + normalForm(g, I).timesScalar(b);
        CHECK(lhs == rhs);
        // multiplicative consistency
        for (std::size_t alpha = 1; alpha <= 5; ++alpha) {
            Monomial x = Monomial::variable(5, alpha);
            CHECK(normalForm(nf.timesMonomial(x), I) == normalForm(f.timesMonomial(x), I));
        }
    }
}

TEST_CASE("border division agrees with the multiplication-operator oracle") {
    // independent route: multiply coordinates one variable at a time, using
    // only the single-step rewrites x_a t_i -> O (which never require a
    // factorization choice), then compare with the division-based path
    auto oracleNF = [](const Monomial& m, const DistinguishedIdeal& I) {
        const OrderIdealData& O = I.orderIdeal();
        std::map<std::size_t, mpq_class> coords{{O.basisIndexOf(Monomial::one(O.n())), 1}};
        for (std::size_t var = 1; var <= O.n(); ++var) {
            for (long e = 0; e < m.exponent(var); ++e) {
                std::map<std::size_t, mpq_class> next;
                for (const auto& [i, c] : coords) {
                    Monomial prod = O.t(i).timesVar(var);
                    if (std::size_t ii = O.basisIndexOf(prod); ii != 0) {
                        next[ii] += c;
                    } else {
                        std::size_t j = O.borderIndexOf(prod);
                        REQUIRE(j != 0);
                        if (!I.isLeading(j)) continue;
                        for (std::size_t i2 : I.trailing()) {
                            auto cij = I.coefficient(i2, j);
                            if (cij != 0) next[i2] += c * cij;
                        }
                    }
                }
                coords = std::move(next);
            }
        }
        Polynomial out(O.n());
        for (const auto& [i, c] : coords) out.addTerm(O.t(i), c);
        return out;
    };

    SplitMix64 rng(902);
    for (const char* name : {"d-5-2-2-3", "running-3-2-1", "iarrobino-emsalem"}) {
        auto I = buildNamedExample(name);
        std::size_t n = I.n();
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<Monomial::Exp> e(n);
            long budget = 7;
            for (auto& x : e) {
                x = static_cast<Monomial::Exp>(rng.next() % (budget + 1));
                budget -= x;
            }
            Monomial m(e);
            CHECK(normalForm(Polynomial(m, 1), I) == oracleNF(m, I));
        }
    }
}

TEST_CASE("reduced S-polynomials vanish for distinguished ideals") {
    SUBCASE("published pair") {
        auto I = buildNamedExample("running-3-2-1");
        CHECK(reducedSPolynomial(I, 1, 2).isZero());
        CHECK_THROWS_AS(reducedSPolynomial(I, 1, 9), ArgumentError);  // x1^2 vs x3^3
    }
    SUBCASE("random seeds and shapes") {
        for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
            auto I = buildShapeIdeal(ShapeParams(4, 2, 2, 3), CoefficientSource(SeededCoefficients{seed}));
            for (const auto& pair : neighborPairs(I.orderIdeal())) {
                CHECK(reducedSPolynomial(I, pair.j, pair.jPrime).isZero());
            }
        }
    }
}

TEST_CASE("verifyBorderBasis flags a perturbed prebasis") {
    auto I = buildNamedExample("running-3-2-1");
    CHECK(verifyBorderBasis(I).isBorderBasis);

    // perturb one non-leading generator: add t_1 = 1 to its tail
    BorderPrebasis B = I.prebasis();
    std::size_t target = 0;
    for (std::size_t j = 1; j <= I.nu(); ++j) {
        if (!I.isLeading(j)) {
            target = j;
            break;
        }
    }
    B.tails[target - 1].emplace_back(1, mpq_class(1));
    auto check = verifyBorderBasis(B);
    CHECK_FALSE(check.isBorderBasis);
    REQUIRE(check.failingPair.has_value());
    // oracle: exhaustive scan over all neighbor pairs finds a nonzero one
    bool anyNonzero = false;
    for (const auto& pair : neighborPairs(*B.O)) {
        if (!reducedSPolynomial(B, pair).isZero()) anyNonzero = true;
    }
    CHECK(anyNonzero);
}

TEST_CASE("origin support certificates") {
    SUBCASE("monomial ideal on the running example: x1^2 is a generator") {
        auto O = runningO();
        std::vector<Monomial> lm = {Monomial::parse("x1^2", 3), Monomial::parse("x1*x2", 3),
                                    Monomial::parse("x1*x3", 3), Monomial::parse("x2^2", 3)};
        std::vector<Monomial> tm = {Monomial::parse("x2*x3", 3), Monomial::parse("x3^2", 3)};
        auto I0 = buildDistinguishedIdeal(O, lm, tm, CoefficientSource(ExplicitCoefficients{}));
        auto cert = originSupportCertificate(I0);
        CHECK(cert[1] == 2);
    }
    SUBCASE("efficient ideal: x1^3 is the first power in the ideal") {
        auto I = buildNamedExample("running-3-2-1");
        auto cert = originSupportCertificate(I);
        CHECK(cert[1] == 3);
        Polynomial p(Monomial::variable(3, 1, 3), 1);
        CHECK(normalForm(p, I).isZero());
    }
    SUBCASE("shape (5,2,2,3): back variables enter at their fourth power") {
        auto I = buildNamedExample("d-5-2-2-3");
        auto cert = originSupportCertificate(I);
        CHECK(cert[4] == 4);
        CHECK(cert[5] == 4);
        for (auto [alpha, e] : cert) {
            Polynomial p(Monomial::variable(5, alpha, static_cast<Monomial::Exp>(e)), 1);
            CHECK(normalForm(p, I).isZero());
        }
    }
}

TEST_CASE("partial derivatives") {
    Polynomial f(Monomial::parse("x1^2", 3), 1);
    Polynomial d = partialDerivative(f, 1);
    CHECK(d == Polynomial(Monomial::parse("x1", 3), 2));
    // (e+1) x_n^e with nonzero coefficient
    Polynomial g(Monomial::variable(3, 3, 4), 1);
    Polynomial dg = partialDerivative(g, 3);
    CHECK(dg == Polynomial(Monomial::variable(3, 3, 3), 4));
    Polynomial c(Monomial::one(3), 5);
    CHECK(partialDerivative(c, 2).isZero());
}
