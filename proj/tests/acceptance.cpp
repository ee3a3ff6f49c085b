// Acceptance suite: one line per criterion, nonzero exit on any failure.
// The heavy reproductions (criteria 6 and 7) run only with --extended and
// BORDERLAB_EXTENDED=1; without the variable the binary exits 77 so the test
// harness records a skip.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "borderlab/analysis.hpp"
#include "borderlab/efficiency.hpp"
#include "borderlab/fixtures.hpp"
#include "borderlab/rng.hpp"

using namespace borderlab;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(const std::string& name, double timeLimitSeconds)
        : name_(name), limit_(timeLimitSeconds), start_(std::chrono::steady_clock::now()) {}

    void check(bool ok, const std::string& what) {
        if (!ok) problems_.push_back(what);
    }

    template <typename A, typename B>
    void equal(const A& got, const B& expected, const std::string& what) {
        if (!(got == static_cast<A>(expected))) {
            std::ostringstream os;
            os << what << ": got " << got << ", expected " << expected;
            problems_.push_back(os.str());
        }
    }

    ~Criterion() {
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (limit_ > 0 && elapsed > limit_) {
            std::ostringstream os;
            os << "runtime " << elapsed << "s exceeds " << limit_ << "s";
            problems_.push_back(os.str());
        }
        std::ostringstream line;
        if (problems_.empty()) {
            line << "PASS  " << name_;
        } else {
            ++failures;
            line << "FAIL  " << name_ << "  --";
            for (const auto& p : problems_) line << " [" << p << "]";
        }
        line.setf(std::ios::fixed);
        line.precision(1);
        line << "  (" << elapsed << "s)";
        std::cout << line.str() << std::endl;
    }

private:
    std::string name_;
    double limit_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::string> problems_;
};

void criterion1() {
    Criterion c("criterion 1: published (5,2,2,3) ideal, dim 59 over Q", 30);
    auto I = buildNamedExample("d-5-2-2-3");
    GenericityReport rep = genericityVerdict(I, DeltaVariant::prime, Field::Q());
    c.equal(rep.tangent.dimension, 59, "tangent dimension");
    c.equal(rep.lowerBound, 59, "lower bound L");
    c.check(rep.verdict == Verdict::generic, "verdict is " + verdictName(rep.verdict));
    c.equal(rep.principalComponentDim, 65, "principal component dimension");
    c.check(rep.tangent.field.rational, "field should be Q");
}

void criterion2() {
    Criterion c("criterion 2: running example, dim 18 and the published Groebner basis", 5);
    auto I = buildNamedExample("running-3-2-1");
    GenericityReport rep = genericityVerdict(I, DeltaVariant::prime, Field::Q());
    c.equal(rep.tangent.dimension, 18, "tangent dimension");

    auto gb = lexGroebnerBasis(I.leadingGenerators());
    std::vector<std::string> got;
    for (const auto& g : gb) got.push_back(g.str());
    std::vector<std::string> expected{"x1^2 + x2*x3 + x3^2", "x1*x2 + x2*x3",
                                      "x1*x3 + x2*x3 + x3^2", "x2^2", "x2*x3^2", "x3^3"};
    c.check(got == expected, "Groebner basis mismatch");

    EfficiencyReport eff = thetaEfficiency(I);
    c.equal(eff.thetaDomainDim, 12, "theta domain");
    c.equal(eff.thetaCodomainDim, 10, "theta codomain");
    c.check(eff.thetaEfficient, "theta-efficiency");
    c.check(exactEfficiency(I), "exact efficiency");
}

void criterion3() {
    Criterion c("criterion 3: Iarrobino-Emsalem reconstruction, dim 25", 10);
    auto O = std::make_shared<const OrderIdealData>(
        lexSegmentComplementFromHilbert(4, {1, 4, 3, 0}));
    std::vector<Monomial> lm;
    for (const char* s : {"x1^2", "x1*x2", "x1*x3", "x1*x4", "x2^2", "x2*x3", "x2*x4"}) {
        lm.push_back(Monomial::parse(s, 4));
    }
    std::vector<Monomial> tm;
    for (const char* s : {"x3^2", "x3*x4", "x4^2"}) tm.push_back(Monomial::parse(s, 4));

    std::size_t successes = 0, tried = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        ++tried;
        auto I = buildDistinguishedIdeal(O, lm, tm, CoefficientSource(SeededCoefficients{seed}));
        GenericityReport rep = genericityVerdict(I, DeltaVariant::prime, Field::Q());
        if (rep.tangent.dimension == 25 && rep.lowerBound == 25 &&
            rep.verdict == Verdict::generic) {
            ++successes;
        }
        if (successes >= 1 && tried >= 3) break;
    }
    c.check(tried >= 3, "tried fewer than 3 seeds");
    c.check(successes >= 1, "no general seed found in 5 tries");
}

void criterion4() {
    {
        Criterion c("criterion 4a: shape (5,2,2,5), dim 104", 120);
        bool ok = false;
        for (std::uint64_t seed = 1; seed <= 5 && !ok; ++seed) {
            auto I = buildShapeIdeal(ShapeParams(5, 2, 2, 5),
                                     CoefficientSource(SeededCoefficients{seed}));
            GenericityReport rep =
                genericityVerdict(I, DeltaVariant::prime, defaultField(I.mu() * I.nu()));
            ok = rep.tangent.dimension == 104 && rep.verdict == Verdict::generic;
        }
        c.check(ok, "no general seed reached dim 104 within 5 tries");
    }
    {
        Criterion c("criterion 4b: shape (6,3,2,3), dim 165 with efficiency pattern", 120);
        bool ok = false;
        std::string detail;
        for (std::uint64_t seed = 1; seed <= 5 && !ok; ++seed) {
            auto I = buildShapeIdeal(ShapeParams(6, 3, 2, 3),
                                     CoefficientSource(SeededCoefficients{seed}));
            GenericityReport rep =
                genericityVerdict(I, DeltaVariant::prime, defaultField(I.mu() * I.nu()));
            EfficiencyReport eff = thetaEfficiency(I);
            bool effOk = !eff.thetaSurjective && eff.thetaDomainDim == 90 &&
                         eff.thetaCodomainDim == 91 && exactEfficiency(I);
            ok = rep.tangent.dimension == 165 && rep.verdict == Verdict::generic &&
                 rep.principalComponentDim == 138 && effOk;
        }
        c.check(ok, "no general seed matched the published pattern within 5 tries");
    }
}

void criterion5() {
    Criterion c("criterion 5: shape (5,2,2,6), dim 139 vs L = 131", 120);
    bool ok = false;
    for (std::uint64_t seed = 1; seed <= 5 && !ok; ++seed) {
        auto I = buildShapeIdeal(ShapeParams(5, 2, 2, 6),
                                 CoefficientSource(SeededCoefficients{seed}));
        GenericityReport rep =
            genericityVerdict(I, DeltaVariant::prime, defaultField(I.mu() * I.nu()));
        ok = rep.tangent.dimension == 139 && rep.lowerBound == 131 &&
             rep.verdict == Verdict::notShapeGeneric;
    }
    c.check(ok, "no general seed matched 139 vs 131 within 5 tries");
}

void criterion6() {
    Criterion c("criterion 6 [extended]: shape (6,3,3,4), rank 6821 mod 32713, dim 705", 0);
    auto I = buildNamedExample("d-6-3-3-4");
    c.equal(I.mu() * I.nu(), 7526, "unknown count mu*nu");
    GenericityReport rep = genericityVerdict(I, DeltaVariant::prime, Field::GF(32713));
    c.equal(rep.tangent.rank, 6821, "relation rank mod 32713");
    c.equal(rep.tangent.dimension, 705, "tangent dimension");
    c.equal(rep.lowerBound, 705, "lower bound L");
    c.check(rep.verdict == Verdict::generic, "verdict is " + verdictName(rep.verdict));
}

void criterion7() {
    struct Case {
        const char* name;
        DeltaVariant variant;
        std::size_t dim;
        bool checkEfficiencyPattern;
    };
    for (Case cs : {Case{"h-1-6-10-10-5-first", DeltaVariant::prime, 255, false},
                    Case{"h-1-6-10-10-5-second", DeltaVariant::doublePrime, 222, false},
                    Case{"h-1-6-10-10-5-third", DeltaVariant::doublePrime, 211, true}}) {
        Criterion c(std::string("criterion 7 [extended]: ") + cs.name + ", dim " +
                        std::to_string(cs.dim),
                    0);
        auto I = buildNamedExample(cs.name);
        GenericityReport rep =
            genericityVerdict(I, cs.variant, defaultField(I.mu() * I.nu()));
        c.equal(rep.tangent.dimension, cs.dim, "tangent dimension");
        c.equal(rep.lowerBound, cs.dim, "lower bound L");
        c.check(rep.verdict == Verdict::generic, "verdict is " + verdictName(rep.verdict));
        if (cs.checkEfficiencyPattern) {
            EfficiencyReport eff = thetaEfficiency(I);
            c.check(!eff.thetaEfficient, "theta-efficiency should fail here");
            c.check(exactEfficiency(I), "exact efficiency");
        }
    }
}

void criterion8() {
    Criterion c("criterion 8: plausibility table boundaries", 10);
    auto plausible = [](std::size_t n, std::size_t k, long r, long s) {
        return genericityIsPlausible(ShapeParams(n, k, r, s)).plausible;
    };
    struct Row {
        std::size_t n, k;
        long r, s;
        bool expected;
    };
    for (Row row : std::vector<Row>{{5, 2, 2, 3, true},
                                    {17, 3, 3, 4, true},
                                    {18, 3, 3, 4, false},
                                    {25, 3, 3, 5, true},
                                    {26, 3, 3, 5, false},
                                    {15, 4, 2, 6, false},
                                    {16, 4, 2, 6, true},
                                    {50, 6, 4, 6, false},
                                    {50, 7, 4, 6, true},
                                    {50, 22, 4, 6, true},
                                    {50, 23, 4, 6, false},
                                    {50, 5, 4, 8, false},
                                    {50, 6, 4, 8, true},
                                    {50, 14, 4, 8, true},
                                    {50, 15, 4, 8, false},
                                    {6, 3, 2, 3, false},
                                    {10, 3, 10, 11, false}}) {
        std::ostringstream what;
        what << "(" << row.n << "," << row.k << "," << row.r << "," << row.s << ")";
        c.equal(plausible(row.n, row.k, row.r, row.s), row.expected, what.str());
    }
}

void criterion9() {
    Criterion c("criterion 9: randomized property suites", 300);

    // sigma surjectivity and the psi formula on 50 random shape ideals
    struct ShapeSeed {
        ShapeParams shape;
        std::uint64_t seed;
    };
    std::vector<ShapeSeed> pool;
    std::uint64_t seed = 1;
    for (int rep = 0; rep < 13; ++rep) {
        pool.push_back({ShapeParams(4, 2, 2, 3), seed++});
        pool.push_back({ShapeParams(5, 2, 2, 3), seed++});
        pool.push_back({ShapeParams(5, 3, 2, 3), seed++});
        pool.push_back({ShapeParams(4, 2, 2, 4), seed++});
    }
    pool.erase(pool.begin() + 50, pool.end());
    std::size_t sigmaOk = 0, psiOk = 0, spolyOk = 0, indepOk = 0, residualOk = 0;
    for (const auto& [shape, sd] : pool) {
        auto I = buildShapeIdeal(shape, CoefficientSource(SeededCoefficients{sd}));
        SigmaSystem sigma = buildSigma(I);
        if (rankExact(sigma.matrix) == sigma.targets.size()) ++sigmaOk;
        auto basis = linearSyzygyBasis(I);
        if (basis.size() == predictedSyzygyCount(I)) ++psiOk;

        bool allZero = true;
        for (const auto& pair : neighborPairs(I.orderIdeal())) {
            if (!reducedSPolynomial(I, pair.j, pair.jPrime).isZero()) allZero = false;
        }
        if (allZero) ++spolyOk;

        DeltaFamily fam = deltaPrimeSets(I);
        TangentVectorSet S = sTangentVectors(I);
        TangentVectorSet Z = zTangentVectors(I, fam);
        TangentVectorSet all = S;
        all.vectors.insert(all.vectors.end(), Z.vectors.begin(), Z.vectors.end());
        if (independenceCheck(all)) ++indepOk;

        TangentSystem sys = tangentRelations(I, basis);
        if (satisfiesTangentRelations(sys, all)) ++residualOk;
    }
    c.equal(sigmaOk, pool.size(), "sigma surjectivity failures");
    c.equal(psiOk, pool.size(), "psi formula failures");
    c.equal(spolyOk, pool.size(), "S-polynomial reduction failures");
    c.equal(indepOk, pool.size(), "S u Z' independence failures");
    c.equal(residualOk, pool.size(), "tangent-relation residual failures");

    // normal-form idempotence and linearity on 200 random polynomials
    {
        auto I = buildNamedExample("d-5-2-2-3");
        SplitMix64 rng(271828);
        std::size_t ok = 0;
        for (int trial = 0; trial < 100; ++trial) {
            Polynomial f(5), g(5);
            for (int t = 0; t < 5; ++t) {
                std::vector<Monomial::Exp> e(5);
                long budget = 5;
                for (auto& x : e) {
                    x = static_cast<Monomial::Exp>(rng.next() % (budget + 1));
                    budget -= x;
                }
                f.addTerm(Monomial(e), mpq_class(static_cast<long>(rng.next() % 9) - 4));
                std::vector<Monomial::Exp> e2(5);
                budget = 5;
                for (auto& x : e2) {
                    x = static_cast<Monomial::Exp>(rng.next() % (budget + 1));
                    budget -= x;
                }
                g.addTerm(Monomial(e2), mpq_class(static_cast<long>(rng.next() % 9) - 4));
            }
            Polynomial nf = normalForm(f, I);
            Polynomial ng = normalForm(g, I);
            bool good = normalForm(nf, I) == nf && normalForm(ng, I) == ng;
            mpq_class a(static_cast<long>(rng.next() % 7) - 3);
            mpq_class b(static_cast<long>(rng.next() % 7) - 3);
            good = good && normalForm(f.timesScalar(a) + g.timesScalar(b), I) ==
                               nf.timesScalar(a) + ng.timesScalar(b);
            if (good) ++ok;
        }
        c.equal(ok, std::size_t(100), "normal-form property failures (2 checks x 100 pairs)");
    }

    // neighbor-syzygy rank equals linear-basis rank on instances up to 600
    // unknowns (the reference (5,2,2,3) ideal sits at 13 * 38 = 494)
    {
        std::vector<DistinguishedIdeal> small;
        small.push_back(buildNamedExample("running-3-2-1"));
        small.push_back(buildShapeIdeal(ShapeParams(4, 2, 2, 3),
                                        CoefficientSource(SeededCoefficients{5})));
        small.push_back(buildNamedExample("d-5-2-2-3"));
        for (const auto& I : small) {
            if (I.mu() * I.nu() > 600) continue;
            auto a = tangentSpaceDimension(I, Field::Q(), false);
            auto b = tangentSpaceDimension(I, Field::Q(), true);
            c.check(a.dimension == b.dimension,
                    "neighbor-syzygy route disagrees on a small instance");
        }
    }

    // A-count upper bounds against enumerated variables, n <= 7
    for (auto params : std::vector<std::array<std::size_t, 4>>{
             {4, 2, 2, 3}, {5, 2, 2, 3}, {6, 3, 2, 3}, {7, 3, 2, 3}, {7, 5, 2, 3}}) {
        ShapeParams shape(params[0], params[1], static_cast<long>(params[2]),
                          static_cast<long>(params[3]));
        auto I = buildShapeIdeal(shape, CoefficientSource(SeededCoefficients{23}));
        auto basis = linearSyzygyBasis(I);
        TangentSystem sys = tangentRelations(I, basis);
        std::map<long, std::set<std::size_t>> seen;
        for (std::size_t r = 0; r < sys.relations.rows(); ++r) {
            for (const auto& [col, v] : sys.relations.row(r)) {
                seen[sys.degreeOfRow[r]].insert(col);
            }
        }
        ShapeCounts counts = shapeCounts(shape);
        for (const auto& [d, vars] : seen) {
            if (counts.aBounds[d] < vars.size()) {
                c.check(false, "A-count bound violated in degree " + std::to_string(d));
            }
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    bool extended = false;
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--extended") extended = true;
    }
    if (extended) {
        const char* env = std::getenv("BORDERLAB_EXTENDED");
        if (!env || std::string(env) != "1") {
            std::cout << "SKIP  extended profile (set BORDERLAB_EXTENDED=1 to run criteria 6-7)"
                      << std::endl;
            return 77;
        }
        criterion6();
        criterion7();
        return failures == 0 ? 0 : 1;
    }
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion8();
    criterion9();
    return failures == 0 ? 0 : 1;
}
