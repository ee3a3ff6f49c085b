#pragma once

#include <vector>

#include "borderlab/ideal.hpp"
#include "borderlab/linalg.hpp"

namespace borderlab {

// A degree-<=1 syzygy sum f_j g_j = 0 with f_j = d_{0,j} + sum_a d_{a,j} x_a.
// Entries are stored sparsely as (alpha, j, d) with alpha = 0 for the
// constant part; construction verifies the defining identity exactly.
struct LinearSyzygy {
    std::size_t n = 0;
    std::size_t nu = 0;
    std::vector<std::tuple<std::size_t, std::size_t, mpz_class>> entries;  // (alpha, j, d)

    Polynomial component(std::size_t j) const;  // f_j
};

// The sigma map K^{(n+1) nu} -> Span(T): basis vector e_{alpha,j} goes to
// pi_T(x_alpha g_j) for alpha >= 1 and to b_j for alpha = 0.  Columns are
// indexed alpha * nu + (j - 1).
struct SigmaSystem {
    TargetSet targets;
    SparseMatrixQ matrix;  // |T| rows, (n+1) nu columns
    std::size_t n;
    std::size_t nu;

    static std::size_t column(std::size_t alpha, std::size_t j, std::size_t nu) {
        return alpha * nu + (j - 1);
    }
};

SigmaSystem buildSigma(const DistinguishedIdeal& I);

// psi = (n+1) nu - |T|, the dimension of the space of linear syzygies.
std::size_t predictedSyzygyCount(const DistinguishedIdeal& I);

// K-basis of the linear syzygies via the kernel of sigma.  Asserts the
// surjectivity of sigma (rank = |T|) and verifies every returned syzygy
// symbolically.
std::vector<LinearSyzygy> linearSyzygyBasis(const DistinguishedIdeal& I);

// The neighbor syzygies of the border basis; a (generally redundant)
// generating set used for cross-validation of the linear-basis route.
std::vector<LinearSyzygy> neighborSyzygies(const DistinguishedIdeal& I);

// Exact check of sum f_j g_j = 0.
bool verifySyzygy(const DistinguishedIdeal& I, const LinearSyzygy& syz);

}  // namespace borderlab
