#pragma once

#include <map>
#include <string>

#include "borderlab/syzygy.hpp"

namespace borderlab {

// Coefficient field for rank computations.
struct Field {
    bool rational = true;
    std::uint64_t prime = 0;

    static Field Q() { return Field{true, 0}; }
    static Field GF(std::uint64_t p) { return Field{false, p}; }
    std::string str() const { return rational ? "Q" : "GF(" + std::to_string(prime) + ")"; }
};

// Default working prime for large modular rank computations.
constexpr std::uint64_t kDefaultPrime = 32713;
// Above this many unknowns the default field switches to GF(32713).
constexpr std::size_t kRationalSizeLimit = 2000;

inline Field defaultField(std::size_t muNu) {
    return muNu <= kRationalSizeLimit ? Field::Q() : Field::GF(kDefaultPrime);
}

// The linear relations a syzygy generating set imposes on a generic tangent
// vector (a_ij).  Unknown (i, j) sits at column (j-1)*mu + (i-1); the row for
// syzygy ell and basis monomial t_i sits at ell*mu + (i-1).  Row and column
// degrees follow deg(t_i).
struct TangentSystem {
    std::size_t mu = 0;
    std::size_t nu = 0;
    SparseMatrixQ relations{0, 0};
    std::vector<long> degreeOfRow;
    std::vector<long> degreeOfVar;

    static std::size_t columnOf(std::size_t i, std::size_t j, std::size_t mu) {
        return (j - 1) * mu + (i - 1);
    }
};

TangentSystem tangentRelations(const DistinguishedIdeal& I,
                               const std::vector<LinearSyzygy>& syzygies);

struct TangentReport {
    std::size_t mu = 0;
    std::size_t nu = 0;
    std::size_t rank = 0;
    Field field;
    std::size_t dimension = 0;  // mu*nu - rank
    std::map<long, std::size_t> relationsByDegree;
};

// dim T_[I] = mu*nu - rank(relations), computed in the requested field from
// the linear-syzygy basis (or the neighbor generating set, for
// cross-validation).
TangentReport tangentSpaceDimension(const DistinguishedIdeal& I, const Field& field,
                                    bool useNeighborSyzygies = false);

// Per-degree relation counts psi * |O_d| for d = 0..s.
std::map<long, std::size_t> relationCountsByDegree(const DistinguishedIdeal& I);

}  // namespace borderlab
