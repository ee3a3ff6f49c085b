#include "borderlab/syzygy.hpp"

#include "borderlab/errors.hpp"

namespace borderlab {

Polynomial LinearSyzygy::component(std::size_t j) const {
    Polynomial f(n);
    for (const auto& [alpha, jj, d] : entries) {
        if (jj != j) continue;
        Monomial m = alpha == 0 ? Monomial::one(n) : Monomial::variable(n, alpha);
        f.addTerm(m, mpq_class(d));
    }
    return f;
}

SigmaSystem buildSigma(const DistinguishedIdeal& I) {
    const OrderIdealData& O = I.orderIdeal();
    const std::size_t n = O.n();
    const std::size_t nu = O.nu();
    TargetSet T(O);
    SparseMatrixQ mat(T.size(), (n + 1) * nu);

    for (std::size_t j = 1; j <= nu; ++j) {
        // alpha = 0: pi_T(g_j) = b_j (tail monomials lie in O, outside T)
        mat.addEntry(T.indexOf(O.b(j)), SigmaSystem::column(0, j, nu), 1);
        Polynomial g = I.generator(j);
        for (std::size_t alpha = 1; alpha <= n; ++alpha) {
            std::size_t col = SigmaSystem::column(alpha, j, nu);
            for (const auto& [m, c] : g.terms()) {
                std::size_t row = T.indexOf(m.timesVar(alpha));
                if (row != TargetSet::npos) mat.addEntry(row, col, c);
            }
        }
    }
    return SigmaSystem{std::move(T), std::move(mat), n, nu};
}

std::size_t predictedSyzygyCount(const DistinguishedIdeal& I) {
    TargetSet T(I.orderIdeal());
    return (I.n() + 1) * I.nu() - T.size();
}

bool verifySyzygy(const DistinguishedIdeal& I, const LinearSyzygy& syz) {
    Polynomial sum(I.n());
    for (const auto& [alpha, j, d] : syz.entries) {
        Monomial m = alpha == 0 ? Monomial::one(I.n()) : Monomial::variable(I.n(), alpha);
        sum += I.generator(j).timesMonomial(m, mpq_class(d));
    }
    return sum.isZero();
}

std::vector<LinearSyzygy> linearSyzygyBasis(const DistinguishedIdeal& I) {
    SigmaSystem sigma = buildSigma(I);
    auto kernel = kernelBasisRational(sigma.matrix);
    std::size_t psi = predictedSyzygyCount(I);
    if (kernel.size() != psi) {
        // rank + kernel = (n+1) nu, so this is exactly surjectivity of sigma
        throw InternalError("sigma map is not surjective: kernel dimension " +
                            std::to_string(kernel.size()) + ", expected " + std::to_string(psi));
    }
    std::vector<LinearSyzygy> out;
    out.reserve(kernel.size());
    for (const auto& vec : kernel) {
        LinearSyzygy syz;
        syz.n = I.n();
        syz.nu = I.nu();
        for (std::size_t col = 0; col < vec.size(); ++col) {
            if (vec[col] == 0) continue;
            std::size_t alpha = col / I.nu();
            std::size_t j = col % I.nu() + 1;
            syz.entries.emplace_back(alpha, j, vec[col]);
        }
        if (!verifySyzygy(I, syz)) {
            throw InternalError("sigma kernel vector is not a syzygy");
        }
        out.push_back(std::move(syz));
    }
    return out;
}

std::vector<LinearSyzygy> neighborSyzygies(const DistinguishedIdeal& I) {
    const OrderIdealData& O = I.orderIdeal();
    BorderPrebasis B = I.prebasis();
    std::vector<LinearSyzygy> out;
    for (const auto& pair : neighborPairs(O)) {
        // S(g_j, g_j') = x_k g_j - (x_l or 1) g_j'; reducing the boundary
        // terms subtracts c_{j''} g_{j''}, and the total is the zero
        // polynomial, i.e. a syzygy.
        Polynomial S = B.generator(pair.j).timesMonomial(Monomial::variable(O.n(), pair.k));
        LinearSyzygy syz;
        syz.n = O.n();
        syz.nu = O.nu();
        syz.entries.emplace_back(pair.k, pair.j, 1);
        if (pair.kind == NeighborKind::nextDoor) {
            S -= B.generator(pair.jPrime);
            syz.entries.emplace_back(0, pair.jPrime, -1);
        } else {
            S -= B.generator(pair.jPrime).timesMonomial(Monomial::variable(O.n(), pair.l));
            syz.entries.emplace_back(pair.l, pair.jPrime, -1);
        }
        for (const auto& [m, c] : S.terms()) {
            std::size_t j2 = O.borderIndexOf(m);
            if (j2 == 0) continue;
            if (c.get_den() != 1) throw InternalError("non-integer S-polynomial coefficient");
            syz.entries.emplace_back(0, j2, -c.get_num());
        }
        if (!verifySyzygy(I, syz)) {
            throw InternalError("neighbor syzygy failed verification; prebasis is not a border basis");
        }
        out.push_back(std::move(syz));
    }
    return out;
}

}  // namespace borderlab
