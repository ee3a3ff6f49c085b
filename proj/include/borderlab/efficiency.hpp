#pragma once

#include <optional>

#include "borderlab/ideal.hpp"

namespace borderlab {

struct EfficiencyReport {
    std::vector<Monomial> qSet;  // Q = dLM u dTM, canonical order
    bool conditionI = false;
    std::optional<Monomial> conditionIWitness;  // non-leading b_j with no divisor in Q
    std::size_t thetaDomainDim = 0;             // n * lambda
    std::size_t thetaCodomainDim = 0;           // |Q|
    bool thetaSurjective = false;
    bool thetaEfficient = false;
    std::optional<bool> exactEfficient;
};

// The linear-algebra screen: condition (i) plus surjectivity of the map
// sending e_{k,iota} to x_k g_{j_iota} inside Span(Q).
EfficiencyReport thetaEfficiency(const DistinguishedIdeal& I);

// Reduced lexicographic Groebner basis via Buchberger with the product and
// chain criteria.  Output polynomials are primitive-integer with positive
// leading coefficient, sorted by leading monomial lex descending.  Throws
// BudgetExceededError after maxPairReductions S-pair reductions.
std::vector<Polynomial> lexGroebnerBasis(const std::vector<Polynomial>& polys,
                                         std::size_t maxPairReductions = 200000);

// Remainder of f under multivariate division by basis (lex order).
Polynomial reduceByBasis(const Polynomial& f, const std::vector<Polynomial>& basis);

// The exact test: I is efficient iff every non-leading boundary monomial
// reduces to zero modulo a Groebner basis of the leading generators.
bool exactEfficiency(const DistinguishedIdeal& I, std::size_t maxPairReductions = 200000);

}  // namespace borderlab
