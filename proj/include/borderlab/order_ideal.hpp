#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "borderlab/monomial.hpp"

namespace borderlab {

// An order ideal O (divisor-closed monomial set) together with its border,
// maximal/minimal subsets and stable index maps.  Basis monomials t_1..t_mu
// and boundary monomials b_1..b_nu are kept in canonical order (degree
// ascending, lex descending), which fixes the indices i and j used
// everywhere downstream.  Immutable after construction.
class OrderIdealData {
public:
    // Validates divisor closure, then derives border and the subsets.
    static OrderIdealData fromMonomials(std::size_t n, std::vector<Monomial> basis);

    std::size_t n() const { return n_; }
    std::size_t mu() const { return basis_.size(); }
    std::size_t nu() const { return border_.size(); }

    const std::vector<Monomial>& basis() const { return basis_; }
    const std::vector<Monomial>& border() const { return border_; }
    const Monomial& t(std::size_t i) const { return basis_[i - 1]; }   // 1-based
    const Monomial& b(std::size_t j) const { return border_[j - 1]; }  // 1-based

    bool inBasis(const Monomial& m) const { return basisIndex_.count(m) > 0; }
    bool inBorder(const Monomial& m) const { return borderIndex_.count(m) > 0; }
    // 1-based index of a basis/boundary monomial; 0 if absent.
    std::size_t basisIndexOf(const Monomial& m) const;
    std::size_t borderIndexOf(const Monomial& m) const;

    // Indices of the maximal basis monomials (x_k t in border for all k) and
    // the minimal boundary monomials (b/x_k in O for every x_k dividing b).
    const std::vector<std::size_t>& maximalBasis() const { return maximalBasis_; }
    const std::vector<std::size_t>& minimalBorder() const { return minimalBorder_; }

    // h_0, ..., h_s, 0
    const std::vector<std::size_t>& hilbertFunction() const { return hilbert_; }
    long maxBasisDegree() const { return static_cast<long>(hilbert_.size()) - 2; }

    const std::vector<std::size_t>& basisOfDegree(long d) const;
    const std::vector<std::size_t>& borderOfDegree(long d) const;

    // True iff in every degree O consists of the lex-smallest monomials
    // (i.e. the complement is a lex-segment ideal).
    bool isLexSegmentComplement() const;

private:
    OrderIdealData() = default;

    std::size_t n_ = 0;
    std::vector<Monomial> basis_;
    std::vector<Monomial> border_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> basisIndex_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> borderIndex_;
    std::vector<std::size_t> maximalBasis_;
    std::vector<std::size_t> minimalBorder_;
    std::vector<std::size_t> hilbert_;
    std::map<long, std::vector<std::size_t>> basisByDegree_;
    std::map<long, std::vector<std::size_t>> borderByDegree_;
};

// Shape parameters (n, kappa, r, s) with n >= 3, 1 < kappa < n, 2 <= r < s.
struct ShapeParams {
    ShapeParams(std::size_t n, std::size_t kappa, long r, long s);
    std::size_t n;
    std::size_t kappa;
    long r;
    long s;
};

// The order ideal with h_d basis monomials in degree d, chosen lex-smallest.
// h must start with 1 and end with 0; the construction is validated for
// divisor closure and the error names the offending monomial.
OrderIdealData lexSegmentComplementFromHilbert(std::size_t n, const std::vector<std::size_t>& h);

// Shape order ideal plus its canonical leading set (the degree-r border) and
// trailing set (the degree-s basis monomials), as border/basis indices.
struct ShapeIdealData {
    OrderIdealData orderIdeal;
    std::vector<std::size_t> leading;   // border indices, canonical order
    std::vector<std::size_t> trailing;  // basis indices, canonical order
};
ShapeIdealData orderIdealFromShape(const ShapeParams& shape);

enum class NeighborKind { nextDoor, acrossStreet };

// x_k b_j = b_j' (next door) or x_k b_j = x_l b_j' (across the street).
struct NeighborPair {
    std::size_t j;
    std::size_t jPrime;
    NeighborKind kind;
    std::size_t k;
    std::size_t l;  // 0 for next-door pairs
};

// Every unordered neighbor pair exactly once (j < j'), deterministic order.
std::vector<NeighborPair> neighborPairs(const OrderIdealData& O);

// The target monomials T = border united with all x_alpha * b_j, canonically
// indexed with an O(1) membership map (pi_T projection support).
class TargetSet {
public:
    explicit TargetSet(const OrderIdealData& O);

    std::size_t size() const { return monomials_.size(); }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    // 0-based index, or npos if the monomial is not a target.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t indexOf(const Monomial& m) const;

private:
    std::vector<Monomial> monomials_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

}  // namespace borderlab
