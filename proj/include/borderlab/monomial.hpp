#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "borderlab/errors.hpp"

namespace borderlab {

// A monomial in x_1, ..., x_n stored as its exponent vector.  All orderings
// in this project are plain lexicographic with x_1 > x_2 > ... > x_n; the
// canonical listing order is degree ascending, lex descending within a degree.
class Monomial {
public:
    using Exp = std::int32_t;

    Monomial() = default;
    explicit Monomial(std::size_t n) : exps_(n, 0) {}
    explicit Monomial(std::vector<Exp> exps);

    // x_var as a monomial over n variables; var is 1-based.
    static Monomial variable(std::size_t n, std::size_t var, Exp power = 1);
    static Monomial one(std::size_t n) { return Monomial(n); }

    std::size_t nvars() const { return exps_.size(); }
    Exp exponent(std::size_t var) const { return exps_[var - 1]; }  // 1-based
    const std::vector<Exp>& exponents() const { return exps_; }

    long degree() const;
    // Sum of exponents of the front variables x_1..x_{n-kappa} and of the
    // back variables x_{n-kappa+1}..x_n; the two add up to degree().
    std::pair<long, long> degreeSplit(std::size_t kappa) const;

    bool isOne() const;
    bool divisibleByVar(std::size_t var) const { return exps_[var - 1] > 0; }

    Monomial operator*(const Monomial& rhs) const;
    Monomial timesVar(std::size_t var) const;
    // Exact quotient; throws ArgumentError if rhs does not divide *this.
    Monomial operator/(const Monomial& rhs) const;
    Monomial divByVar(std::size_t var) const;

    bool operator==(const Monomial& rhs) const { return exps_ == rhs.exps_; }

    std::string str() const;
    // Parses the rendering produced by str(): "1", "x2", "x1^2*x3", ...
    static Monomial parse(const std::string& text, std::size_t n);

private:
    std::vector<Exp> exps_;
};

// Strict total lexicographic order: negative if a < b, 0 if equal, positive
// if a > b.  Throws DimensionError on mismatched variable counts.
int lexCompare(const Monomial& a, const Monomial& b);

inline bool lexLess(const Monomial& a, const Monomial& b) { return lexCompare(a, b) < 0; }
inline bool lexGreater(const Monomial& a, const Monomial& b) { return lexCompare(a, b) > 0; }

// true iff a divides b (componentwise a <= b).
bool divides(const Monomial& a, const Monomial& b);

// Canonical listing order: degree ascending, then lex descending.
bool canonicalLess(const Monomial& a, const Monomial& b);

struct CanonicalLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return canonicalLess(a, b); }
};
struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return lexGreater(a, b); }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto e : m.exponents()) {
            h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

// All monomials of the given degree in variables x_{first}..x_{last} of an
// n-variable ring, listed lex descending.  first/last are 1-based.
std::vector<Monomial> monomialsOfDegree(std::size_t n, long degree,
                                        std::size_t first, std::size_t last);
inline std::vector<Monomial> monomialsOfDegree(std::size_t n, long degree) {
    return monomialsOfDegree(n, degree, 1, n);
}

}  // namespace borderlab
