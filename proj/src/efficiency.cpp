#include "borderlab/efficiency.hpp"

#include <algorithm>
#include <list>
#include <set>

#include "borderlab/errors.hpp"
#include "borderlab/linalg.hpp"

namespace borderlab {

EfficiencyReport thetaEfficiency(const DistinguishedIdeal& I) {
    const OrderIdealData& O = I.orderIdeal();
    const std::size_t n = O.n();
    EfficiencyReport rep;

    std::set<Monomial, CanonicalLess> q;
    for (std::size_t j : I.leading()) {
        for (std::size_t k = 1; k <= n; ++k) q.insert(O.b(j).timesVar(k));
    }
    for (std::size_t i : I.trailing()) {
        for (std::size_t k = 1; k <= n; ++k) q.insert(O.t(i).timesVar(k));
    }
    rep.qSet.assign(q.begin(), q.end());

    rep.conditionI = true;
    for (std::size_t j = 1; j <= O.nu(); ++j) {
        if (I.isLeading(j)) continue;
        bool covered = false;
        for (const auto& m : rep.qSet) {
            if (divides(m, O.b(j))) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            rep.conditionI = false;
            rep.conditionIWitness = O.b(j);
            break;
        }
    }

    std::unordered_map<Monomial, std::size_t, MonomialHash> qIndex;
    for (std::size_t r = 0; r < rep.qSet.size(); ++r) qIndex[rep.qSet[r]] = r;

    rep.thetaDomainDim = n * I.lambda();
    rep.thetaCodomainDim = rep.qSet.size();
    SparseMatrixQ theta(rep.qSet.size(), rep.thetaDomainDim);
    std::size_t col = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t j : I.leading()) {
            Polynomial prod = I.generator(j).timesMonomial(Monomial::variable(n, k));
            for (const auto& [m, c] : prod.terms()) {
                auto it = qIndex.find(m);
                if (it == qIndex.end()) {
                    throw InternalError("product monomial " + m.str() +
                                        " escapes Q; leading/trailing data is inconsistent");
                }
                theta.addEntry(it->second, col, c);
            }
            ++col;
        }
    }
    rep.thetaSurjective = rankExact(theta) == rep.qSet.size();
    rep.thetaEfficient = rep.conditionI && rep.thetaSurjective;
    return rep;
}

Polynomial reduceByBasis(const Polynomial& f, const std::vector<Polynomial>& basis) {
    Polynomial rem(f.nvars());
    Polynomial work = f;
    while (!work.isZero()) {
        const Monomial& lm = work.leadingMonomial();
        const mpq_class lc = work.leadingCoefficient();
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.isZero()) continue;
            if (!divides(g.leadingMonomial(), lm)) continue;
            Monomial cof = lm / g.leadingMonomial();
            work -= g.timesMonomial(cof, lc / g.leadingCoefficient());
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.addTerm(lm, lc);
            work.addTerm(lm, -lc);
        }
    }
    return rem;
}

namespace {

Monomial lcmMonomial(const Monomial& a, const Monomial& b) {
    std::vector<Monomial::Exp> e(a.nvars());
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = std::max(a.exponents()[i], b.exponents()[i]);
    }
    return Monomial(std::move(e));
}

bool coprimeLeads(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a.exponents()[i] > 0 && b.exponents()[i] > 0) return false;
    }
    return true;
}

}  // namespace

std::vector<Polynomial> lexGroebnerBasis(const std::vector<Polynomial>& polys,
                                         std::size_t maxPairReductions) {
    std::vector<Polynomial> G;
    for (const auto& f : polys) {
        if (!f.isZero()) G.push_back(f.primitivePart());
    }
    if (G.empty()) return G;

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::list<Pair> pairs;
    auto addPairsFor = [&](std::size_t t) {
        for (std::size_t i = 0; i < t; ++i) {
            Monomial l = lcmMonomial(G[i].leadingMonomial(), G[t].leadingMonomial());
            // product criterion
            if (coprimeLeads(G[i].leadingMonomial(), G[t].leadingMonomial())) continue;
            pairs.push_back({i, t, std::move(l)});
        }
    };
    for (std::size_t t = 0; t < G.size(); ++t) addPairsFor(t);

    std::size_t reductions = 0;
    while (!pairs.empty()) {
        // normal strategy: smallest lcm in the term order
        auto best = pairs.begin();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            if (canonicalLess(it->lcm, best->lcm)) best = it;
        }
        Pair p = *best;
        pairs.erase(best);

        // chain criterion: drop the pair if some other basis element divides
        // the lcm and both its pairs with i and j are no longer pending
        bool skip = false;
        for (std::size_t t = 0; t < G.size() && !skip; ++t) {
            if (t == p.i || t == p.j) continue;
            if (!divides(G[t].leadingMonomial(), p.lcm)) continue;
            bool pendingWithI = false, pendingWithJ = false;
            for (const auto& q : pairs) {
                if ((q.i == p.i && q.j == t) || (q.i == t && q.j == p.i)) pendingWithI = true;
                if ((q.i == p.j && q.j == t) || (q.i == t && q.j == p.j)) pendingWithJ = true;
            }
            if (!pendingWithI && !pendingWithJ) skip = true;
        }
        if (skip) continue;

        if (++reductions > maxPairReductions) {
            throw BudgetExceededError("Buchberger S-pair budget exceeded (" +
                                      std::to_string(maxPairReductions) + ")");
        }
        const Polynomial& f = G[p.i];
        const Polynomial& g = G[p.j];
        Polynomial S = f.timesMonomial(p.lcm / f.leadingMonomial(), 1 / f.leadingCoefficient()) -
                       g.timesMonomial(p.lcm / g.leadingMonomial(), 1 / g.leadingCoefficient());
        Polynomial r = reduceByBasis(S, G);
        if (!r.isZero()) {
            G.push_back(r.primitivePart());
            addPairsFor(G.size() - 1);
        }
    }

    // minimalize: drop generators whose lead is divisible by another lead
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            if (divides(G[j].leadingMonomial(), G[i].leadingMonomial()) &&
                !(G[j].leadingMonomial() == G[i].leadingMonomial() && j > i)) {
                redundant = true;
            }
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    // interreduce tails
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        Polynomial r = reduceByBasis(minimal[i], others);
        if (!r.isZero()) reduced.push_back(r.primitivePart());
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
        return lexGreater(a.leadingMonomial(), b.leadingMonomial());
    });
    return reduced;
}

bool exactEfficiency(const DistinguishedIdeal& I, std::size_t maxPairReductions) {
    auto gb = lexGroebnerBasis(I.leadingGenerators(), maxPairReductions);
    const OrderIdealData& O = I.orderIdeal();
    for (std::size_t j = 1; j <= O.nu(); ++j) {
        if (I.isLeading(j)) continue;
        Polynomial b(O.b(j), 1);
        if (!reduceByBasis(b, gb).isZero()) return false;
    }
    return true;
}

}  // namespace borderlab
