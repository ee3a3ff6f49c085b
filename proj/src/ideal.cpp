#include "borderlab/ideal.hpp"

#include <algorithm>
#include <set>

#include "borderlab/errors.hpp"
#include "borderlab/rng.hpp"

namespace borderlab {

Polynomial BorderPrebasis::generator(std::size_t j) const {
    Polynomial g(O->b(j), 1);
    for (const auto& [i, c] : tails[j - 1]) g.addTerm(O->t(i), -c);
    return g;
}

Polynomial reducedSPolynomial(const BorderPrebasis& B, const NeighborPair& pair) {
    const OrderIdealData& O = *B.O;
    Polynomial S = B.generator(pair.j).timesMonomial(Monomial::variable(O.n(), pair.k));
    if (pair.kind == NeighborKind::nextDoor) {
        S -= B.generator(pair.jPrime);
    } else {
        S -= B.generator(pair.jPrime).timesMonomial(Monomial::variable(O.n(), pair.l));
    }
    // The boundary heads cancel, so S is supported on O and the border; one
    // rewrite per boundary term finishes the reduction.
    Polynomial out(O.n());
    for (const auto& [m, c] : S.terms()) {
        std::size_t j2 = O.borderIndexOf(m);
        if (j2 == 0) {
            if (!O.inBasis(m)) {
                throw InternalError("S-polynomial term " + m.str() + " is neither basis nor boundary");
            }
            out.addTerm(m, c);
        } else {
            for (const auto& [i, cij] : B.tails[j2 - 1]) out.addTerm(O.t(i), -c * cij);
        }
    }
    return out;
}

BorderBasisCheck verifyBorderBasis(const BorderPrebasis& B) {
    for (const auto& pair : neighborPairs(*B.O)) {
        if (!reducedSPolynomial(B, pair).isZero()) {
            return {false, std::make_pair(pair.j, pair.jPrime)};
        }
    }
    return {true, std::nullopt};
}

std::int64_t DistinguishedIdeal::coefficient(std::size_t i, std::size_t j) const {
    long jp = lmPos_[j - 1];
    long ip = tmPos_[i - 1];
    if (jp < 0 || ip < 0) return 0;
    return coeff_[static_cast<std::size_t>(jp)][static_cast<std::size_t>(ip)];
}

std::int64_t& DistinguishedIdeal::coefficientRef(std::size_t lmPos, std::size_t tmPos) {
    return coeff_[lmPos][tmPos];
}

Polynomial DistinguishedIdeal::generator(std::size_t j) const {
    Polynomial g(O_->b(j), 1);
    long jp = lmPos_[j - 1];
    if (jp >= 0) {
        for (std::size_t ip = 0; ip < tm_.size(); ++ip) {
            std::int64_t c = coeff_[static_cast<std::size_t>(jp)][ip];
            if (c != 0) g.addTerm(O_->t(tm_[ip]), -mpq_class(static_cast<long>(c)));
        }
    }
    return g;
}

std::vector<Polynomial> DistinguishedIdeal::generators() const {
    std::vector<Polynomial> out;
    out.reserve(nu());
    for (std::size_t j = 1; j <= nu(); ++j) out.push_back(generator(j));
    return out;
}

std::vector<Polynomial> DistinguishedIdeal::leadingGenerators() const {
    std::vector<Polynomial> out;
    out.reserve(lm_.size());
    for (std::size_t j : lm_) out.push_back(generator(j));
    return out;
}

BorderPrebasis DistinguishedIdeal::prebasis() const {
    BorderPrebasis B;
    B.O = O_;
    B.tails.resize(nu());
    for (std::size_t jp = 0; jp < lm_.size(); ++jp) {
        for (std::size_t ip = 0; ip < tm_.size(); ++ip) {
            std::int64_t c = coeff_[jp][ip];
            if (c != 0) B.tails[lm_[jp] - 1].emplace_back(tm_[ip], mpq_class(static_cast<long>(c)));
        }
    }
    return B;
}

DistinguishedIdeal buildDistinguishedIdeal(std::shared_ptr<const OrderIdealData> O,
                                           std::vector<std::size_t> lmIndices,
                                           std::vector<std::size_t> tmIndices,
                                           const CoefficientSource& source) {
    if (!O) throw ArgumentError("null order ideal");
    if (lmIndices.empty()) throw ValidationError("leading set must be nonempty");
    if (tmIndices.empty()) throw ValidationError("trailing set must be nonempty");
    std::sort(lmIndices.begin(), lmIndices.end());
    std::sort(tmIndices.begin(), tmIndices.end());
    lmIndices.erase(std::unique(lmIndices.begin(), lmIndices.end()), lmIndices.end());
    tmIndices.erase(std::unique(tmIndices.begin(), tmIndices.end()), tmIndices.end());

    for (std::size_t j : lmIndices) {
        if (j < 1 || j > O->nu()) throw ArgumentError("leading border index out of range");
        const auto& mins = O->minimalBorder();
        if (!std::binary_search(mins.begin(), mins.end(), j)) {
            throw ValidationError("leading monomial not minimal: " + O->b(j).str());
        }
    }
    for (std::size_t i : tmIndices) {
        if (i < 1 || i > O->mu()) throw ArgumentError("trailing basis index out of range");
        const auto& maxs = O->maximalBasis();
        if (!std::binary_search(maxs.begin(), maxs.end(), i)) {
            throw ValidationError("trailing monomial not maximal: " + O->t(i).str());
        }
    }
    // LM must avoid the border of TM.
    std::set<std::size_t> lmSet(lmIndices.begin(), lmIndices.end());
    for (std::size_t i : tmIndices) {
        for (std::size_t k = 1; k <= O->n(); ++k) {
            std::size_t j = O->borderIndexOf(O->t(i).timesVar(k));
            if (j != 0 && lmSet.count(j)) {
                throw ValidationError("overlap violation: " + O->b(j).str() +
                                      " is both leading and in the border of trailing monomial " +
                                      O->t(i).str());
            }
        }
    }

    DistinguishedIdeal I;
    I.O_ = std::move(O);
    I.lm_ = std::move(lmIndices);
    I.tm_ = std::move(tmIndices);
    I.lmPos_.assign(I.O_->nu(), -1);
    I.tmPos_.assign(I.O_->mu(), -1);
    for (std::size_t p = 0; p < I.lm_.size(); ++p) I.lmPos_[I.lm_[p] - 1] = static_cast<long>(p);
    for (std::size_t p = 0; p < I.tm_.size(); ++p) I.tmPos_[I.tm_[p] - 1] = static_cast<long>(p);
    I.coeff_.assign(I.lm_.size(), std::vector<std::int64_t>(I.tm_.size(), 0));

    if (const auto* expl = std::get_if<ExplicitCoefficients>(&source)) {
        for (const auto& [key, c] : expl->values) {
            auto [i, j] = key;
            if (j < 1 || j > I.O_->nu() || i < 1 || i > I.O_->mu() ||
                I.lmPos_[j - 1] < 0 || I.tmPos_[i - 1] < 0) {
                throw SchemaError("/coefficients",
                                  "coefficient key (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") is not a distinguished pair");
            }
            I.coeff_[static_cast<std::size_t>(I.lmPos_[j - 1])]
                    [static_cast<std::size_t>(I.tmPos_[i - 1])] = c;
        }
    } else {
        const auto& spec = std::get<SeededCoefficients>(source);
        SplitMix64 rng(spec.seed);
        for (std::size_t jp = 0; jp < I.lm_.size(); ++jp) {
            for (std::size_t ip = 0; ip < I.tm_.size(); ++ip) {
                I.coeff_[jp][ip] = spec.kind == SeededCoefficients::Kind::ternary
                                       ? rng.ternary()
                                       : rng.bernoulli(spec.p);
            }
        }
        I.seed_ = spec.seed;
    }
    return I;
}

DistinguishedIdeal monomialIdeal(std::shared_ptr<const OrderIdealData> O) {
    if (!O) throw ArgumentError("null order ideal");
    DistinguishedIdeal I;
    I.O_ = std::move(O);
    I.lmPos_.assign(I.O_->nu(), -1);
    I.tmPos_.assign(I.O_->mu(), -1);
    return I;
}

DistinguishedIdeal buildDistinguishedIdeal(std::shared_ptr<const OrderIdealData> O,
                                           const std::vector<Monomial>& lm,
                                           const std::vector<Monomial>& tm,
                                           const CoefficientSource& source) {
    std::vector<std::size_t> lmIdx, tmIdx;
    for (const auto& m : lm) {
        std::size_t j = O->borderIndexOf(m);
        if (j == 0) throw ValidationError("leading monomial " + m.str() + " is not a boundary monomial");
        lmIdx.push_back(j);
    }
    for (const auto& m : tm) {
        std::size_t i = O->basisIndexOf(m);
        if (i == 0) throw ValidationError("trailing monomial " + m.str() + " is not a basis monomial");
        tmIdx.push_back(i);
    }
    return buildDistinguishedIdeal(std::move(O), std::move(lmIdx), std::move(tmIdx), source);
}

DistinguishedIdeal buildShapeIdeal(const ShapeParams& shape, const CoefficientSource& source) {
    auto data = orderIdealFromShape(shape);
    auto O = std::make_shared<const OrderIdealData>(std::move(data.orderIdeal));
    return buildDistinguishedIdeal(std::move(O), data.leading, data.trailing, source);
}

Polynomial normalForm(const Polynomial& f, const DistinguishedIdeal& I) {
    const OrderIdealData& O = I.orderIdeal();
    Polynomial work = f;
    for (;;) {
        // Pick the reduction target: maximal degree among monomials outside
        // O, lex-descending tiebreak.
        const Monomial* target = nullptr;
        mpq_class coeff;
        long bestDeg = -1;
        for (const auto& [m, c] : work.terms()) {
            if (O.inBasis(m)) continue;
            long d = m.degree();
            // terms() iterates lex descending, so on ties the first hit wins
            if (d > bestDeg) {
                bestDeg = d;
                target = &m;
                coeff = c;
            }
        }
        if (!target) return work;

        // Factor target = m' * b_j with deg(b_j) maximal, lex-greatest tiebreak.
        const Monomial* bestB = nullptr;
        std::size_t bestJ = 0;
        for (std::size_t j = 1; j <= O.nu(); ++j) {
            const Monomial& b = O.b(j);
            if (!divides(b, *target)) continue;
            if (!bestB || b.degree() > bestB->degree() ||
                (b.degree() == bestB->degree() && lexGreater(b, *bestB))) {
                bestB = &b;
                bestJ = j;
            }
        }
        if (!bestB) {
            throw InternalError("no boundary monomial divides " + target->str() +
                                " during border division");
        }
        Monomial cofactor = *target / *bestB;
        work -= I.generator(bestJ).timesMonomial(cofactor, coeff);
    }
}

Polynomial reducedSPolynomial(const DistinguishedIdeal& I, std::size_t j, std::size_t jPrime) {
    const OrderIdealData& O = I.orderIdeal();
    if (j < 1 || j > O.nu() || jPrime < 1 || jPrime > O.nu() || j == jPrime) {
        throw ArgumentError("bad border indices for S-polynomial");
    }
    // Recover the neighbor relation; orientation follows the given order.
    const Monomial& bj = O.b(j);
    const Monomial& bp = O.b(jPrime);
    long dj = bj.degree(), dp = bp.degree();
    NeighborPair pair{j, jPrime, NeighborKind::nextDoor, 0, 0};
    bool found = false;
    if (dp == dj + 1) {
        for (std::size_t k = 1; k <= O.n() && !found; ++k) {
            if (bj.timesVar(k) == bp) {
                pair = {j, jPrime, NeighborKind::nextDoor, k, 0};
                found = true;
            }
        }
    } else if (dj == dp + 1) {
        for (std::size_t k = 1; k <= O.n() && !found; ++k) {
            if (bp.timesVar(k) == bj) {
                pair = {jPrime, j, NeighborKind::nextDoor, k, 0};
                found = true;
            }
        }
    } else if (dj == dp) {
        for (std::size_t k = 1; k <= O.n() && !found; ++k) {
            Monomial lhs = bj.timesVar(k);
            for (std::size_t l = 1; l <= O.n() && !found; ++l) {
                if (l == k) continue;
                if (lhs == bp.timesVar(l)) {
                    pair = {j, jPrime, NeighborKind::acrossStreet, k, l};
                    found = true;
                }
            }
        }
    }
    if (!found) {
        throw ArgumentError("boundary monomials " + bj.str() + " and " + bp.str() +
                            " are not neighbors");
    }
    return reducedSPolynomial(I.prebasis(), pair);
}

BorderBasisCheck verifyBorderBasis(const DistinguishedIdeal& I) {
    return verifyBorderBasis(I.prebasis());
}

std::map<std::size_t, long> originSupportCertificate(const DistinguishedIdeal& I) {
    const OrderIdealData& O = I.orderIdeal();
    std::map<std::size_t, long> out;
    for (std::size_t alpha = 1; alpha <= O.n(); ++alpha) {
        long ePrime = 0;
        while (O.inBasis(Monomial::variable(O.n(), alpha, static_cast<Monomial::Exp>(ePrime)))) {
            ++ePrime;
        }
        long e = ePrime;
        for (;; ++e) {
            if (e > ePrime + 1) {
                throw InternalError("origin-support certificate exceeded the e'+1 bound for x" +
                                    std::to_string(alpha));
            }
            Polynomial p(Monomial::variable(O.n(), alpha, static_cast<Monomial::Exp>(e)), 1);
            if (normalForm(p, I).isZero()) break;
        }
        out[alpha] = e;
    }
    return out;
}

}  // namespace borderlab
