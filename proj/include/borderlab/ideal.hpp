#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "borderlab/order_ideal.hpp"
#include "borderlab/polynomial.hpp"

namespace borderlab {

// A general O-border prebasis g_j = b_j - tail_j with tails supported on the
// basis monomials.  This is the validation surface: prebases that are not
// distinguished are only ever checked, never constructed for analysis.
struct BorderPrebasis {
    std::shared_ptr<const OrderIdealData> O;
    // tails[j-1] lists (basis index i, coefficient c_ij), so that
    // g_j = b_j - sum c_ij t_i.
    std::vector<std::vector<std::pair<std::size_t, mpq_class>>> tails;

    Polynomial generator(std::size_t j) const;
};

// Reduction of S(g_j, g_j') modulo the prebasis: boundary-monomial terms are
// rewritten once via their generators, which leaves a combination of basis
// monomials.
Polynomial reducedSPolynomial(const BorderPrebasis& B, const NeighborPair& pair);

struct BorderBasisCheck {
    bool isBorderBasis;
    // First neighbor pair (j, j') whose reduced S-polynomial is nonzero.
    std::optional<std::pair<std::size_t, std::size_t>> failingPair;
};
BorderBasisCheck verifyBorderBasis(const BorderPrebasis& B);

// How the coefficients of a distinguished ideal are produced.
struct ExplicitCoefficients {
    // (basis index i, border index j) -> c_ij; keys must be distinguished pairs.
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> values;
};
struct SeededCoefficients {
    std::uint64_t seed = 0;
    enum class Kind { ternary, bernoulli } kind = Kind::ternary;  // {-1,0,1} / {0,1}
    double p = 0.5;  // P(c = 1) for the bernoulli generator
};
using CoefficientSource = std::variant<ExplicitCoefficients, SeededCoefficients>;

// A distinguished ideal: leading set LM inside the minimal border, trailing
// set TM inside the maximal basis monomials, LM disjoint from the border of
// TM, and integer tail coefficients supported exactly on the distinguished
// pairs.  The derived border basis is g_j = b_j - sum_{i in TM} c_ij t_i for
// b_j in LM and g_j = b_j otherwise; it is always an O-border basis.
class DistinguishedIdeal {
public:
    const OrderIdealData& orderIdeal() const { return *O_; }
    std::shared_ptr<const OrderIdealData> orderIdealPtr() const { return O_; }
    std::size_t n() const { return O_->n(); }
    std::size_t mu() const { return O_->mu(); }
    std::size_t nu() const { return O_->nu(); }

    const std::vector<std::size_t>& leading() const { return lm_; }    // border indices
    const std::vector<std::size_t>& trailing() const { return tm_; }   // basis indices
    std::size_t lambda() const { return lm_.size(); }
    std::size_t tau() const { return tm_.size(); }

    bool isLeading(std::size_t j) const { return lmPos_[j - 1] >= 0; }
    bool isTrailing(std::size_t i) const { return tmPos_[i - 1] >= 0; }

    // c_ij for a basis index i and border index j; 0 off the distinguished set.
    std::int64_t coefficient(std::size_t i, std::size_t j) const;
    std::int64_t& coefficientRef(std::size_t lmPos, std::size_t tmPos);

    Polynomial generator(std::size_t j) const;
    std::vector<Polynomial> generators() const;         // all nu of them
    std::vector<Polynomial> leadingGenerators() const;  // the lambda in G

    BorderPrebasis prebasis() const;

    std::optional<std::uint64_t> seed() const { return seed_; }
    // Provenance note for ideals reloaded from files that record their seed.
    void annotateSeed(std::uint64_t seed) { seed_ = seed; }

    friend DistinguishedIdeal buildDistinguishedIdeal(std::shared_ptr<const OrderIdealData>,
                                                      std::vector<std::size_t>,
                                                      std::vector<std::size_t>,
                                                      const CoefficientSource&);
    friend DistinguishedIdeal monomialIdeal(std::shared_ptr<const OrderIdealData>);

private:
    std::shared_ptr<const OrderIdealData> O_;
    std::vector<std::size_t> lm_;
    std::vector<std::size_t> tm_;
    std::vector<long> lmPos_;  // border index j -> position in lm_, -1 if absent
    std::vector<long> tmPos_;  // basis index i -> position in tm_, -1 if absent
    std::vector<std::vector<std::int64_t>> coeff_;  // [lmPos][tmPos]
    std::optional<std::uint64_t> seed_;
};

DistinguishedIdeal buildDistinguishedIdeal(std::shared_ptr<const OrderIdealData> O,
                                           std::vector<std::size_t> lmIndices,
                                           std::vector<std::size_t> tmIndices,
                                           const CoefficientSource& source);

// The monomial ideal (dO): every generator is its boundary monomial, the
// origin of the distinguished locus for any choice of leading/trailing sets.
// Carries empty leading and trailing data, so it exists even for order
// ideals (such as {1}) where no nondegenerate choice satisfies the overlap
// condition.
DistinguishedIdeal monomialIdeal(std::shared_ptr<const OrderIdealData> O);

// Convenience overload taking monomials instead of indices.
DistinguishedIdeal buildDistinguishedIdeal(std::shared_ptr<const OrderIdealData> O,
                                           const std::vector<Monomial>& lm,
                                           const std::vector<Monomial>& tm,
                                           const CoefficientSource& source);

// The canonical shape ideal: lex-segment complement O with LM = degree-r
// border and TM = degree-s basis monomials.
DistinguishedIdeal buildShapeIdeal(const ShapeParams& shape, const CoefficientSource& source);

// Border division: rewrites every monomial outside O via the border basis.
// The result is the unique representative of f supported on O.
Polynomial normalForm(const Polynomial& f, const DistinguishedIdeal& I);

Polynomial reducedSPolynomial(const DistinguishedIdeal& I, std::size_t j, std::size_t jPrime);
BorderBasisCheck verifyBorderBasis(const DistinguishedIdeal& I);

// For each variable alpha, an exponent e with x_alpha^e in the ideal,
// certified by a vanishing normal form.  Returns the least such e.
std::map<std::size_t, long> originSupportCertificate(const DistinguishedIdeal& I);

}  // namespace borderlab
