#include "borderlab/deformation.hpp"

#include <algorithm>
#include <atomic>
#include <set>

#include "borderlab/errors.hpp"
#include "borderlab/parallel.hpp"

namespace borderlab {

std::size_t DeltaFamily::totalCount() const {
    std::size_t total = 0;
    for (const auto& pv : perVariable) total += pv.monomials.size();
    return total;
}

namespace {

DeltaFamily::PerVariable witnessData(const DistinguishedIdeal& I, std::size_t alpha) {
    const OrderIdealData& O = I.orderIdeal();
    const std::size_t n = O.n();
    DeltaFamily::PerVariable pv;
    pv.alpha = alpha;
    for (long e = 0;; ++e) {
        Monomial xne = Monomial::variable(n, n, static_cast<Monomial::Exp>(e));
        std::size_t ti = O.basisIndexOf(xne);
        if (ti == 0) {
            throw InternalError("no witness exponent for x" + std::to_string(alpha));
        }
        Monomial b = xne.timesVar(alpha);
        if (!O.inBasis(b)) {
            pv.ePrime = e;
            pv.basisIndex = ti;
            pv.borderIndex = O.borderIndexOf(b);
            if (pv.borderIndex == 0) throw InternalError("witness boundary monomial missing");
            pv.witnessLeading = I.isLeading(pv.borderIndex);
            return pv;
        }
    }
}

DeltaFamily deltaSets(const DistinguishedIdeal& I, DeltaVariant variant) {
    const OrderIdealData& O = I.orderIdeal();
    if (!O.isLexSegmentComplement()) {
        throw ValidationError("delta families are only defined over lex-segment complements");
    }
    const std::size_t n = O.n();
    DeltaFamily fam;
    fam.variant = variant;
    for (std::size_t alpha = 1; alpha <= n; ++alpha) {
        DeltaFamily::PerVariable pv = witnessData(I, alpha);
        const Monomial& t = O.t(pv.basisIndex);
        std::set<Monomial, CanonicalLess> chosen;
        if (alpha == n) {
            chosen.insert(Monomial::one(n));
        } else {
            long maxDeg = O.maxBasisDegree() - t.degree();
            for (long d = 0; d <= maxDeg; ++d) {
                for (const auto& m : monomialsOfDegree(n, d, alpha + 1, n)) {
                    Monomial prod = t * m;
                    std::size_t i = O.basisIndexOf(prod);
                    if (i == 0) continue;
                    if (pv.witnessLeading && I.isTrailing(i)) continue;
                    chosen.insert(m);
                }
            }
        }
        if (variant == DeltaVariant::doublePrime && !pv.witnessLeading) {
            // extension monomials: quotients of leading monomials by the
            // witness basis monomial, free of x_alpha
            for (std::size_t j : I.leading()) {
                const Monomial& lm = O.b(j);
                if (!divides(t, lm)) continue;
                Monomial m = lm / t;
                if (m.divisibleByVar(alpha)) continue;
                chosen.insert(m);
            }
        }
        if (!chosen.count(Monomial::one(n))) {
            throw InternalError("delta set for x" + std::to_string(alpha) + " lost the monomial 1");
        }
        pv.monomials.assign(chosen.begin(), chosen.end());
        fam.perVariable.push_back(std::move(pv));
    }
    return fam;
}

}  // namespace

DeltaFamily deltaPrimeSets(const DistinguishedIdeal& I) {
    return deltaSets(I, DeltaVariant::prime);
}

DeltaFamily deltaDoublePrimeSets(const DistinguishedIdeal& I) {
    return deltaSets(I, DeltaVariant::doublePrime);
}

TangentVectorSet sTangentVectors(const DistinguishedIdeal& I) {
    TangentVectorSet out;
    out.mu = I.mu();
    out.nu = I.nu();
    for (std::size_t j : I.leading()) {
        for (std::size_t i : I.trailing()) {
            TangentVectorSet::Entry e;
            e.label = "c[" + std::to_string(i) + "," + std::to_string(j) + "]";
            e.coords.emplace_back(TangentSystem::columnOf(i, j, I.mu()), mpq_class(-1));
            out.vectors.push_back(std::move(e));
        }
    }
    return out;
}

TangentVectorSet zTangentVectors(const DistinguishedIdeal& I, const DeltaFamily& delta) {
    const OrderIdealData& O = I.orderIdeal();
    TangentVectorSet out;
    out.mu = I.mu();
    out.nu = I.nu();
    std::vector<Polynomial> generators = I.generators();

    struct Job {
        std::size_t alpha;
        std::size_t delta;
        const Monomial* m;
    };
    std::vector<Job> jobs;
    for (const auto& pv : delta.perVariable) {
        for (std::size_t d = 0; d < pv.monomials.size(); ++d) {
            jobs.push_back({pv.alpha, d + 1, &pv.monomials[d]});
        }
    }
    out.vectors.resize(jobs.size());
    std::atomic<bool> badTerm{false};
    parallelFor(jobs.size(), [&](std::size_t idx) {
        const Job& job = jobs[idx];
        TangentVectorSet::Entry e;
        e.label = "z[" + std::to_string(job.alpha) + "," + std::to_string(job.delta) + "]";
        for (std::size_t j = 1; j <= O.nu(); ++j) {
            Polynomial partial = partialDerivative(generators[j - 1], job.alpha);
            if (partial.isZero()) continue;
            Polynomial nf = normalForm(partial.timesMonomial(*job.m), I);
            for (const auto& [tm, c] : nf.terms()) {
                std::size_t i = O.basisIndexOf(tm);
                if (i == 0) {
                    badTerm = true;
                    return;
                }
                e.coords.emplace_back(TangentSystem::columnOf(i, j, I.mu()), c);
            }
        }
        std::sort(e.coords.begin(), e.coords.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        out.vectors[idx] = std::move(e);
    });
    if (badTerm) throw InternalError("normal form term outside the order ideal");
    return out;
}

bool independenceCheck(const TangentVectorSet& vs) {
    if (vs.vectors.empty()) return true;
    SparseMatrixQ M(vs.vectors.size(), vs.mu * vs.nu);
    for (std::size_t r = 0; r < vs.vectors.size(); ++r) {
        for (const auto& [c, v] : vs.vectors[r].coords) M.addEntry(r, c, v);
    }
    return rankExact(M) == vs.vectors.size();
}

bool satisfiesTangentRelations(const TangentSystem& sys, const TangentVectorSet& vs) {
    for (const auto& entry : vs.vectors) {
        std::vector<mpq_class> dense(sys.mu * sys.nu, 0);
        for (const auto& [c, v] : entry.coords) dense[c] = v;
        for (std::size_t r = 0; r < sys.relations.rows(); ++r) {
            mpq_class acc = 0;
            for (const auto& [c, v] : sys.relations.row(r)) acc += v * dense[c];
            if (acc != 0) return false;
        }
    }
    return true;
}

std::string verdictName(Verdict v) {
    switch (v) {
        case Verdict::generic: return "generic";
        case Verdict::notShapeGeneric: return "notShapeGeneric";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

GenericityReport genericityVerdict(const DistinguishedIdeal& I, DeltaVariant variant,
                                   const Field& field) {
    GenericityReport rep;
    rep.variant = variant;
    rep.delta = variant == DeltaVariant::prime ? deltaPrimeSets(I) : deltaDoublePrimeSets(I);

    TangentVectorSet S = sTangentVectors(I);
    TangentVectorSet Z = zTangentVectors(I, rep.delta);
    rep.sCount = S.vectors.size();
    rep.zCount = Z.vectors.size();
    rep.lowerBound = rep.sCount + rep.zCount;

    TangentVectorSet all = S;
    all.vectors.insert(all.vectors.end(), Z.vectors.begin(), Z.vectors.end());
    rep.independenceVerified = independenceCheck(all);

    rep.tangent = tangentSpaceDimension(I, field);
    rep.principalComponentDim = I.n() * I.mu();

    if (!rep.independenceVerified) {
        rep.verdict = Verdict::inconclusive;
        rep.notes.push_back("S u Z is linearly dependent; L is not a certified lower bound");
    } else if (rep.tangent.dimension == rep.lowerBound) {
        rep.verdict = Verdict::generic;
        rep.elementaryComponentDim = rep.lowerBound;
        if (!field.rational) {
            rep.notes.push_back("dimension computed mod " + std::to_string(field.prime) +
                                "; equality with L pins the rational dimension");
        }
    } else {
        rep.verdict = Verdict::notShapeGeneric;
        if (!field.rational) {
            rep.notes.push_back("dimension computed mod " + std::to_string(field.prime) +
                                " bounds the rational dimension from above");
        }
    }
    if (I.mu() > 1 && I.mu() < 8) {
        rep.notes.push_back("mu = " + std::to_string(I.mu()) +
                            " < 8: no nontrivial elementary component exists at this length");
    }
    return rep;
}

}  // namespace borderlab
