#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "borderlab/order_ideal.hpp"

namespace borderlab {

// Closed-form counts for the shape (n, kappa, r, s): all values exact
// arbitrary-precision integers, so scans reach n = 50000 and beyond.
struct ShapeCounts {
    ShapeParams shape;
    mpz_class lambda;
    mpz_class tau;
    mpz_class mu;
    mpz_class nu;
    mpz_class targetTotal;  // |T|
    mpz_class psi;          // (n+1) nu - |T|
    std::map<long, mpz_class> oSizes;           // d -> |O_d|, 0 <= d <= s
    std::map<long, mpz_class> tSizes;           // d -> |T_d|, r <= d <= s+2
    std::map<long, mpz_class> aBounds;          // d -> upper bound on |A_d|
    std::map<long, mpz_class> relationCounts;   // d -> psi * |O_d|
};

ShapeCounts shapeCounts(const ShapeParams& shape);

struct PlausibilityReport {
    ShapeCounts counts;
    std::map<long, bool> condition1ByDegree;  // relations in degree d >= bound on |A_d|
    bool condition1 = false;
    mpz_class condition2Lhs;  // n * lambda (theta domain)
    mpz_class condition2Rhs;  // |Q| (theta codomain)
    bool condition2 = false;
    bool plausible = false;
};

std::map<long, bool> condition1(const ShapeParams& shape);
// Returns (holds, lhs, rhs).
std::tuple<bool, mpz_class, mpz_class> condition2(const ShapeParams& shape);

PlausibilityReport genericityIsPlausible(const ShapeParams& shape);

struct ScanRange {
    std::size_t lo;
    std::size_t hi;  // inclusive
};

// All valid (n, kappa, r, s) combinations in the given ranges, in
// lexicographic order; invalid combinations are skipped.
std::vector<PlausibilityReport> plausibleScan(ScanRange n, ScanRange kappa, ScanRange r,
                                              ScanRange s);

mpz_class binomial(const mpz_class& n, unsigned long k);

}  // namespace borderlab
