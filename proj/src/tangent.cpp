#include "borderlab/tangent.hpp"

#include <atomic>

#include "borderlab/errors.hpp"
#include "borderlab/parallel.hpp"

namespace borderlab {

namespace {

// One-step normal forms of the products x_alpha * t_i, which always land in
// O or on the border: a basis monomial stays itself, a leading boundary
// monomial rewrites to its tail, any other boundary monomial dies.  The
// table is the whole reduction workload for tangent relations, since syzygy
// coefficients have degree <= 1.
struct StepTable {
    // cell (alpha-1)*mu + (i-1): list of (basis index, integer coefficient)
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> cells;
};

StepTable buildStepTable(const DistinguishedIdeal& I) {
    const OrderIdealData& O = I.orderIdeal();
    StepTable table;
    table.cells.resize(O.n() * O.mu());
    std::atomic<bool> escaped{false};
    parallelFor(table.cells.size(), [&](std::size_t cellIdx) {
        std::size_t alpha = cellIdx / O.mu() + 1;
        std::size_t i = cellIdx % O.mu() + 1;
        auto& cell = table.cells[cellIdx];
        Monomial m = O.t(i).timesVar(alpha);
        if (std::size_t ii = O.basisIndexOf(m); ii != 0) {
            cell.emplace_back(ii, 1);
            return;
        }
        std::size_t j = O.borderIndexOf(m);
        if (j == 0) {
            escaped = true;
            return;
        }
        if (!I.isLeading(j)) return;
        for (std::size_t i2 : I.trailing()) {
            std::int64_t c = I.coefficient(i2, j);
            if (c != 0) cell.emplace_back(i2, c);
        }
    });
    if (escaped) throw InternalError("x_a t_i escaped the border");
    return table;
}

}  // namespace

TangentSystem tangentRelations(const DistinguishedIdeal& I,
                               const std::vector<LinearSyzygy>& syzygies) {
    const OrderIdealData& O = I.orderIdeal();
    const std::size_t mu = O.mu();
    const std::size_t nu = O.nu();
    StepTable table = buildStepTable(I);

    TangentSystem sys;
    sys.mu = mu;
    sys.nu = nu;
    sys.relations = SparseMatrixQ(syzygies.size() * mu, mu * nu);
    sys.degreeOfRow.resize(syzygies.size() * mu);
    sys.degreeOfVar.resize(mu * nu);
    for (std::size_t j = 1; j <= nu; ++j) {
        for (std::size_t i = 1; i <= mu; ++i) {
            sys.degreeOfVar[TangentSystem::columnOf(i, j, mu)] = O.t(i).degree();
        }
    }

    for (std::size_t ell = 0; ell < syzygies.size(); ++ell) {
        const LinearSyzygy& syz = syzygies[ell];
        if (syz.nu != nu) throw ArgumentError("syzygy over wrong border size");
        std::size_t rowBase = ell * mu;
        for (std::size_t i = 1; i <= mu; ++i) {
            sys.degreeOfRow[rowBase + (i - 1)] = O.t(i).degree();
        }
        // Expand sum_j f_j (sum_i a_ij t_i) mod I and collect the t_ihat
        // coefficient rows.
        for (const auto& [alpha, j, d] : syz.entries) {
            mpq_class dq(d);
            for (std::size_t i = 1; i <= mu; ++i) {
                std::size_t var = TangentSystem::columnOf(i, j, mu);
                if (alpha == 0) {
                    sys.relations.addEntry(rowBase + (i - 1), var, dq);
                } else {
                    for (const auto& [ihat, coef] :
                         table.cells[(alpha - 1) * mu + (i - 1)]) {
                        sys.relations.addEntry(rowBase + (ihat - 1), var, dq * coef);
                    }
                }
            }
        }
    }
    return sys;
}

TangentReport tangentSpaceDimension(const DistinguishedIdeal& I, const Field& field,
                                    bool useNeighborSyzygies) {
    auto syzygies = useNeighborSyzygies ? neighborSyzygies(I) : linearSyzygyBasis(I);
    TangentSystem sys = tangentRelations(I, syzygies);

    TangentReport rep;
    rep.mu = sys.mu;
    rep.nu = sys.nu;
    rep.field = field;
    rep.rank = field.rational ? rankExact(sys.relations) : rankModP(sys.relations, field.prime);
    rep.dimension = sys.mu * sys.nu - rep.rank;
    for (long d : sys.degreeOfRow) rep.relationsByDegree[d]++;
    return rep;
}

std::map<long, std::size_t> relationCountsByDegree(const DistinguishedIdeal& I) {
    const OrderIdealData& O = I.orderIdeal();
    std::size_t psi = predictedSyzygyCount(I);
    std::map<long, std::size_t> out;
    for (long d = 0; d <= O.maxBasisDegree(); ++d) {
        out[d] = psi * O.basisOfDegree(d).size();
    }
    return out;
}

}  // namespace borderlab
