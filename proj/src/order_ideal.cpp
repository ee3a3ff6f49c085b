#include "borderlab/order_ideal.hpp"

#include <algorithm>
#include <set>

#include "borderlab/errors.hpp"

namespace borderlab {

OrderIdealData OrderIdealData::fromMonomials(std::size_t n, std::vector<Monomial> basis) {
    if (n == 0) throw ArgumentError("need at least one variable");
    if (basis.empty()) throw ValidationError("order ideal must be nonempty");
    for (const auto& m : basis) {
        if (m.nvars() != n) throw DimensionError("basis monomial over wrong variable count");
    }
    std::sort(basis.begin(), basis.end(), CanonicalLess{});
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

    OrderIdealData O;
    O.n_ = n;
    O.basis_ = std::move(basis);
    for (std::size_t i = 0; i < O.basis_.size(); ++i) {
        O.basisIndex_[O.basis_[i]] = i + 1;
    }

    // Divisor closure: every m/x_k must be present.
    for (const auto& m : O.basis_) {
        for (std::size_t k = 1; k <= n; ++k) {
            if (!m.divisibleByVar(k)) continue;
            Monomial q = m.divByVar(k);
            if (!O.basisIndex_.count(q)) {
                throw ValidationError("not divisor-closed: " + m.str() + " is in the order ideal but " +
                                      q.str() + " is not");
            }
        }
    }
    if (!O.basisIndex_.count(Monomial::one(n))) {
        throw ValidationError("order ideal must contain 1");
    }

    // Border = (x_1 O u ... u x_n O) \ O.
    std::set<Monomial, CanonicalLess> border;
    for (const auto& m : O.basis_) {
        for (std::size_t k = 1; k <= n; ++k) {
            Monomial p = m.timesVar(k);
            if (!O.basisIndex_.count(p)) border.insert(p);
        }
    }
    O.border_.assign(border.begin(), border.end());
    for (std::size_t j = 0; j < O.border_.size(); ++j) {
        O.borderIndex_[O.border_[j]] = j + 1;
    }

    for (std::size_t i = 0; i < O.basis_.size(); ++i) {
        const Monomial& t = O.basis_[i];
        bool maximal = true;
        for (std::size_t k = 1; k <= n && maximal; ++k) {
            if (O.basisIndex_.count(t.timesVar(k))) maximal = false;
        }
        if (maximal) O.maximalBasis_.push_back(i + 1);
    }
    for (std::size_t j = 0; j < O.border_.size(); ++j) {
        const Monomial& b = O.border_[j];
        bool minimal = true;
        for (std::size_t k = 1; k <= n && minimal; ++k) {
            if (b.divisibleByVar(k) && !O.basisIndex_.count(b.divByVar(k))) minimal = false;
        }
        if (minimal) O.minimalBorder_.push_back(j + 1);
    }

    long s = 0;
    for (const auto& m : O.basis_) s = std::max(s, m.degree());
    O.hilbert_.assign(static_cast<std::size_t>(s) + 2, 0);
    for (std::size_t i = 0; i < O.basis_.size(); ++i) {
        long d = O.basis_[i].degree();
        O.hilbert_[static_cast<std::size_t>(d)]++;
        O.basisByDegree_[d].push_back(i + 1);
    }
    for (std::size_t j = 0; j < O.border_.size(); ++j) {
        O.borderByDegree_[O.border_[j].degree()].push_back(j + 1);
    }
    return O;
}

std::size_t OrderIdealData::basisIndexOf(const Monomial& m) const {
    auto it = basisIndex_.find(m);
    return it == basisIndex_.end() ? 0 : it->second;
}

std::size_t OrderIdealData::borderIndexOf(const Monomial& m) const {
    auto it = borderIndex_.find(m);
    return it == borderIndex_.end() ? 0 : it->second;
}

const std::vector<std::size_t>& OrderIdealData::basisOfDegree(long d) const {
    static const std::vector<std::size_t> empty;
    auto it = basisByDegree_.find(d);
    return it == basisByDegree_.end() ? empty : it->second;
}

const std::vector<std::size_t>& OrderIdealData::borderOfDegree(long d) const {
    static const std::vector<std::size_t> empty;
    auto it = borderByDegree_.find(d);
    return it == borderByDegree_.end() ? empty : it->second;
}

bool OrderIdealData::isLexSegmentComplement() const {
    for (const auto& [d, idxs] : basisByDegree_) {
        auto all = monomialsOfDegree(n_, d);  // lex descending
        // O_d must equal the |O_d| lex-smallest, i.e. the tail of the list.
        std::size_t want = idxs.size();
        if (want > all.size()) return false;
        for (std::size_t k = 0; k < want; ++k) {
            // canonical order within a degree is lex descending, so O_d as
            // stored matches all[...] from position all.size()-want onward.
            if (!(basis_[idxs[k] - 1] == all[all.size() - want + k])) return false;
        }
    }
    return true;
}

ShapeParams::ShapeParams(std::size_t n_, std::size_t kappa_, long r_, long s_)
    : n(n_), kappa(kappa_), r(r_), s(s_) {
    if (n < 3) throw ValidationError("shape requires n >= 3");
    if (!(kappa > 1 && kappa < n)) throw ValidationError("shape requires 1 < kappa < n");
    if (r < 2) throw ValidationError("shape requires r >= 2");
    if (s <= r) throw ValidationError("shape requires s > r");
}

OrderIdealData lexSegmentComplementFromHilbert(std::size_t n, const std::vector<std::size_t>& h) {
    if (h.empty() || h.front() != 1) throw ValidationError("Hilbert function must start with h_0 = 1");
    if (h.back() != 0) throw ValidationError("Hilbert function must end with 0");
    std::vector<Monomial> basis;
    for (std::size_t d = 0; d < h.size(); ++d) {
        if (h[d] == 0) continue;
        auto all = monomialsOfDegree(n, static_cast<long>(d));  // lex descending
        if (h[d] > all.size()) {
            throw ValidationError("h_" + std::to_string(d) + " = " + std::to_string(h[d]) +
                                  " exceeds the number of degree-" + std::to_string(d) + " monomials");
        }
        // lex-smallest h_d monomials = last h_d entries of the descending list
        basis.insert(basis.end(), all.end() - static_cast<long>(h[d]), all.end());
    }
    return OrderIdealData::fromMonomials(n, std::move(basis));
}

ShapeIdealData orderIdealFromShape(const ShapeParams& shape) {
    const std::size_t n = shape.n;
    const std::size_t backFirst = n - shape.kappa + 1;
    std::vector<Monomial> basis;
    for (long d = 0; d < shape.r; ++d) {
        auto all = monomialsOfDegree(n, d);
        basis.insert(basis.end(), all.begin(), all.end());
    }
    for (long d = shape.r; d <= shape.s; ++d) {
        auto back = monomialsOfDegree(n, d, backFirst, n);
        basis.insert(basis.end(), back.begin(), back.end());
    }
    ShapeIdealData out{OrderIdealData::fromMonomials(n, std::move(basis)), {}, {}};
    const auto& O = out.orderIdeal;
    for (std::size_t j : O.borderOfDegree(shape.r)) out.leading.push_back(j);
    for (std::size_t i : O.basisOfDegree(shape.s)) out.trailing.push_back(i);
    return out;
}

std::vector<NeighborPair> neighborPairs(const OrderIdealData& O) {
    std::vector<NeighborPair> out;
    const std::size_t nu = O.nu();
    const std::size_t n = O.n();
    for (std::size_t j = 1; j <= nu; ++j) {
        for (std::size_t jp = j + 1; jp <= nu; ++jp) {
            const Monomial& bj = O.b(j);
            const Monomial& bp = O.b(jp);
            long dj = bj.degree(), dp = bp.degree();
            if (dp == dj + 1) {
                for (std::size_t k = 1; k <= n; ++k) {
                    if (bj.timesVar(k) == bp) {
                        out.push_back({j, jp, NeighborKind::nextDoor, k, 0});
                        break;
                    }
                }
            } else if (dp == dj) {
                bool found = false;
                for (std::size_t k = 1; k <= n && !found; ++k) {
                    Monomial lhs = bj.timesVar(k);
                    for (std::size_t l = 1; l <= n && !found; ++l) {
                        if (l == k) continue;
                        if (lhs == bp.timesVar(l)) {
                            out.push_back({j, jp, NeighborKind::acrossStreet, k, l});
                            found = true;
                        }
                    }
                }
            }
        }
    }
    return out;
}

TargetSet::TargetSet(const OrderIdealData& O) {
    std::set<Monomial, CanonicalLess> targets;
    for (const auto& b : O.border()) {
        targets.insert(b);
        for (std::size_t a = 1; a <= O.n(); ++a) targets.insert(b.timesVar(a));
    }
    monomials_.assign(targets.begin(), targets.end());
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_[monomials_[i]] = i;
}

std::size_t TargetSet::indexOf(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? npos : it->second;
}

}  // namespace borderlab
