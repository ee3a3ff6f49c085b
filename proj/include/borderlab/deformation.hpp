#pragma once

#include <optional>
#include <string>

#include "borderlab/tangent.hpp"

namespace borderlab {

enum class DeltaVariant { prime, doublePrime };

// The per-variable monomial families parameterizing coordinate-change
// deformations of a distinguished ideal over a lex-segment complement.
struct DeltaFamily {
    struct PerVariable {
        std::size_t alpha = 0;
        long ePrime = 0;             // least e with x_n^e in O, x_alpha x_n^e outside
        std::size_t borderIndex = 0;  // b_{j_alpha} = x_alpha x_n^e'
        std::size_t basisIndex = 0;   // t_{i_alpha} = x_n^e'
        bool witnessLeading = false;  // b_{j_alpha} in LM
        std::vector<Monomial> monomials;  // m_{alpha,delta}; m_{alpha,1} = 1
    };
    DeltaVariant variant = DeltaVariant::prime;
    std::vector<PerVariable> perVariable;  // indexed alpha-1

    std::size_t totalCount() const;
};

// Delta' per the restricted definition; requires a lex-segment complement.
DeltaFamily deltaPrimeSets(const DistinguishedIdeal& I);
// Delta'' = Delta' plus the extension monomials available when b_{j_alpha}
// is non-leading and t_{i_alpha} m lands in LM.
DeltaFamily deltaDoublePrimeSets(const DistinguishedIdeal& I);

// A family of tangent vectors in the mu*nu flattening, with labels.
struct TangentVectorSet {
    std::size_t mu = 0;
    std::size_t nu = 0;
    struct Entry {
        std::string label;
        std::vector<std::pair<std::size_t, mpq_class>> coords;  // (column, value)
    };
    std::vector<Entry> vectors;
};

// One vector per distinguished pair: a_ij = -1, all else 0.
TangentVectorSet sTangentVectors(const DistinguishedIdeal& I);

// The coordinate-change vectors: block j of v_{p,alpha,delta} is the normal
// form of dg_j/dx_alpha * m_{alpha,delta}.
TangentVectorSet zTangentVectors(const DistinguishedIdeal& I, const DeltaFamily& delta);

// True iff the stacked vectors have full rank over Q.
bool independenceCheck(const TangentVectorSet& vs);

// Exact check that every vector satisfies every tangent-space relation.
bool satisfiesTangentRelations(const TangentSystem& sys, const TangentVectorSet& vs);

enum class Verdict { generic, notShapeGeneric, inconclusive };
std::string verdictName(Verdict v);

struct GenericityReport {
    std::size_t sCount = 0;
    std::size_t zCount = 0;
    std::size_t lowerBound = 0;  // L = |S| + |Z|
    bool independenceVerified = false;
    TangentReport tangent;
    Verdict verdict = Verdict::inconclusive;
    std::size_t principalComponentDim = 0;            // n * mu
    std::optional<std::size_t> elementaryComponentDim;  // = L when generic
    DeltaVariant variant = DeltaVariant::prime;
    DeltaFamily delta;
    std::vector<std::string> notes;
};

// L = |S_p| + |Z_p|; generic iff S u Z is independent and dim T_[I] equals L.
// Over GF(p) equality still certifies genericity: the mod-p dimension is an
// upper bound and L a lower bound for the rational dimension.
GenericityReport genericityVerdict(const DistinguishedIdeal& I, DeltaVariant variant,
                                   const Field& field);

}  // namespace borderlab
