#include "borderlab/plausibility.hpp"

#include "borderlab/errors.hpp"

namespace borderlab {

mpz_class binomial(const mpz_class& n, unsigned long k) {
    if (n < 0) throw ArgumentError("negative binomial argument");
    mpz_class out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
}

namespace {

// C(m - 1 + d, d): number of degree-d monomials in m variables.
mpz_class monomialCount(std::size_t m, long d) {
    if (d < 0) return 0;
    return binomial(mpz_class(static_cast<unsigned long>(m) - 1 + static_cast<unsigned long>(d)),
                    static_cast<unsigned long>(d));
}

}  // namespace

ShapeCounts shapeCounts(const ShapeParams& shape) {
    const std::size_t n = shape.n;
    const std::size_t kap = shape.kappa;
    const long r = shape.r;
    const long s = shape.s;
    ShapeCounts c{shape, 0, 0, 0, 0, 0, 0, {}, {}, {}, {}};

    c.lambda = monomialCount(n, r) - monomialCount(kap, r);
    c.tau = monomialCount(kap, s);
    for (long d = 0; d < r; ++d) c.oSizes[d] = monomialCount(n, d);
    for (long d = r; d <= s; ++d) c.oSizes[d] = monomialCount(kap, d);
    for (const auto& [d, sz] : c.oSizes) c.mu += sz;

    // border: degree r is the leading set, degrees r+1..s+1 are front-variable
    // multiples of the back-variable layer below, plus the pure back
    // monomials of degree s+1
    c.nu = c.lambda;
    for (long d = r + 1; d <= s + 1; ++d) {
        c.nu += mpz_class(static_cast<unsigned long>(n - kap)) * monomialCount(kap, d - 1);
    }
    c.nu += binomial(mpz_class(static_cast<unsigned long>(kap) + static_cast<unsigned long>(s)),
                     static_cast<unsigned long>(s) + 1);

    // target monomials degree by degree
    const mpz_class pairsFront =
        binomial(mpz_class(static_cast<unsigned long>(n - kap) + 1), 2);
    c.tSizes[r] = c.lambda;
    c.tSizes[r + 1] = binomial(mpz_class(static_cast<unsigned long>(n) + static_cast<unsigned long>(r)),
                               static_cast<unsigned long>(r) + 1) -
                      binomial(mpz_class(static_cast<unsigned long>(kap) + static_cast<unsigned long>(r)),
                               static_cast<unsigned long>(r) + 1);
    for (long d = r + 2; d <= s; ++d) {
        c.tSizes[d] = mpz_class(static_cast<unsigned long>(n - kap)) * monomialCount(kap, d - 1) +
                      pairsFront * monomialCount(kap, d - 2);
    }
    c.tSizes[s + 1] =
        binomial(mpz_class(static_cast<unsigned long>(kap) + static_cast<unsigned long>(s)),
                 static_cast<unsigned long>(s) + 1) +
        mpz_class(static_cast<unsigned long>(n - kap)) * monomialCount(kap, s) +
        pairsFront * monomialCount(kap, s - 1);
    c.tSizes[s + 2] =
        binomial(mpz_class(static_cast<unsigned long>(kap) + static_cast<unsigned long>(s) + 1),
                 static_cast<unsigned long>(s) + 2) +
        mpz_class(static_cast<unsigned long>(n - kap)) *
            binomial(mpz_class(static_cast<unsigned long>(kap) + static_cast<unsigned long>(s)),
                     static_cast<unsigned long>(s) + 1) +
        pairsFront * monomialCount(kap, s);
    for (const auto& [d, sz] : c.tSizes) c.targetTotal += sz;

    c.psi = mpz_class(static_cast<unsigned long>(n) + 1) * c.nu - c.targetTotal;

    // upper bounds on |A_d|: stay-put + move-up (+ jump-up in degree s)
    const mpz_class nonLeading = c.nu - c.lambda;
    for (long d = 0; d <= s; ++d) {
        mpz_class stayPut = nonLeading * (d < r ? monomialCount(n, d) : monomialCount(kap, d));
        mpz_class moveUp;
        if (d == 0) {
            moveUp = 0;
        } else if (d <= r - 1) {
            moveUp = c.nu * monomialCount(n, d - 1);
        } else if (d == r) {
            // only the monomials of O_{r-1} with full back degree can move up
            moveUp = c.nu * monomialCount(kap, r - 1);
        } else {
            moveUp = c.nu * monomialCount(kap, d - 1);
        }
        mpz_class bound = stayPut + moveUp;
        if (d == s) bound += c.nu * monomialCount(n, r - 1);  // jump-up block
        c.aBounds[d] = bound;
    }

    for (long d = 0; d <= s; ++d) c.relationCounts[d] = c.psi * c.oSizes[d];
    return c;
}

std::map<long, bool> condition1(const ShapeParams& shape) {
    ShapeCounts c = shapeCounts(shape);
    std::map<long, bool> out;
    for (long d = 0; d <= shape.s; ++d) {
        out[d] = c.relationCounts[d] >= c.aBounds[d];
    }
    return out;
}

std::tuple<bool, mpz_class, mpz_class> condition2(const ShapeParams& shape) {
    ShapeCounts c = shapeCounts(shape);
    mpz_class lhs = mpz_class(static_cast<unsigned long>(shape.n)) * c.lambda;
    mpz_class rhs = c.tSizes[shape.r + 1] +
                    mpz_class(static_cast<unsigned long>(shape.n - shape.kappa)) *
                        monomialCount(shape.kappa, shape.s) +
                    binomial(mpz_class(static_cast<unsigned long>(shape.kappa) +
                                       static_cast<unsigned long>(shape.s)),
                             static_cast<unsigned long>(shape.s) + 1);
    return {lhs >= rhs, lhs, rhs};
}

PlausibilityReport genericityIsPlausible(const ShapeParams& shape) {
    PlausibilityReport rep{shapeCounts(shape), {}, true, 0, 0, false, false};
    for (long d = 0; d <= shape.s; ++d) {
        bool ok = rep.counts.relationCounts[d] >= rep.counts.aBounds[d];
        rep.condition1ByDegree[d] = ok;
        if (!ok) rep.condition1 = false;
    }
    auto [ok2, lhs, rhs] = condition2(shape);
    rep.condition2 = ok2;
    rep.condition2Lhs = lhs;
    rep.condition2Rhs = rhs;
    rep.plausible = rep.condition1 && rep.condition2;
    return rep;
}

std::vector<PlausibilityReport> plausibleScan(ScanRange n, ScanRange kappa, ScanRange r,
                                              ScanRange s) {
    std::vector<PlausibilityReport> out;
    for (std::size_t nn = n.lo; nn <= n.hi; ++nn) {
        for (std::size_t kk = kappa.lo; kk <= kappa.hi; ++kk) {
            for (std::size_t rr = r.lo; rr <= r.hi; ++rr) {
                for (std::size_t ss = s.lo; ss <= s.hi; ++ss) {
                    if (nn < 3 || kk <= 1 || kk >= nn || rr < 2 || ss <= rr) continue;
                    ShapeParams shape(nn, kk, static_cast<long>(rr), static_cast<long>(ss));
                    out.push_back(genericityIsPlausible(shape));
                }
            }
        }
    }
    return out;
}

}  // namespace borderlab
