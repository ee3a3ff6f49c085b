#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "borderlab/monomial.hpp"

namespace borderlab {

// Sparse polynomial with exact rational coefficients.  Terms are kept lex
// descending, so begin() is the lex-leading term; zero coefficients are
// never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, mpq_class, LexGreater>;

    Polynomial() = default;
    explicit Polynomial(std::size_t n) : n_(n) {}
    Polynomial(const Monomial& m, mpq_class c);

    std::size_t nvars() const { return n_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const Monomial& leadingMonomial() const;
    const mpq_class& leadingCoefficient() const;
    long degree() const;  // -1 for the zero polynomial

    mpq_class coefficient(const Monomial& m) const;
    void addTerm(const Monomial& m, const mpq_class& c);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& rhs) const;

    Polynomial timesMonomial(const Monomial& m, const mpq_class& c = 1) const;
    Polynomial timesScalar(const mpq_class& c) const;

    bool operator==(const Polynomial& rhs) const;

    // Divides by the gcd of the numerators over the lcm of denominators and
    // makes the lex-leading coefficient positive.  Zero stays zero.
    Polynomial primitivePart() const;

    std::string str() const;

private:
    std::size_t n_ = 0;
    TermMap terms_;
    void checkCompatible(const Polynomial& rhs) const;
};

// Formal partial derivative with respect to x_alpha (1-based).
Polynomial partialDerivative(const Polynomial& f, std::size_t alpha);

}  // namespace borderlab
