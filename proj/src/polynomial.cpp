#include "borderlab/polynomial.hpp"

#include <sstream>

#include "borderlab/errors.hpp"

namespace borderlab {

Polynomial::Polynomial(const Monomial& m, mpq_class c) : n_(m.nvars()) {
    if (c != 0) terms_.emplace(m, std::move(c));
}

void Polynomial::checkCompatible(const Polynomial& rhs) const {
    if (n_ != 0 && rhs.n_ != 0 && n_ != rhs.n_) {
        throw DimensionError("polynomials over different variable counts");
    }
}

const Monomial& Polynomial::leadingMonomial() const {
    if (terms_.empty()) throw ArgumentError("leading monomial of zero polynomial");
    return terms_.begin()->first;
}

const mpq_class& Polynomial::leadingCoefficient() const {
    if (terms_.empty()) throw ArgumentError("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

long Polynomial::degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

mpq_class Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void Polynomial::addTerm(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    if (n_ == 0) n_ = m.nvars();
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    checkCompatible(rhs);
    if (n_ == 0) n_ = rhs.n_;
    for (const auto& [m, c] : rhs.terms_) addTerm(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    checkCompatible(rhs);
    if (n_ == 0) n_ = rhs.n_;
    for (const auto& [m, c] : rhs.terms_) addTerm(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    Polynomial out = *this;
    out += rhs;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    Polynomial out = *this;
    out -= rhs;
    return out;
}

Polynomial Polynomial::operator-() const { return timesScalar(-1); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    checkCompatible(rhs);
    Polynomial out(n_ ? n_ : rhs.n_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : rhs.terms_) {
            out.addTerm(m1 * m2, c1 * c2);
        }
    }
    return out;
}

Polynomial Polynomial::timesMonomial(const Monomial& m, const mpq_class& c) const {
    Polynomial out(n_);
    if (c == 0) return out;
    for (const auto& [m1, c1] : terms_) out.terms_.emplace(m1 * m, c1 * c);
    return out;
}

Polynomial Polynomial::timesScalar(const mpq_class& c) const {
    Polynomial out(n_);
    if (c == 0) return out;
    for (const auto& [m1, c1] : terms_) out.terms_.emplace(m1, c1 * c);
    return out;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    return terms_ == rhs.terms_;
}

Polynomial Polynomial::primitivePart() const {
    if (terms_.empty()) return *this;
    mpz_class num = 0, den = 1;
    for (const auto& [m, c] : terms_) {
        num = gcd(num, c.get_num());
        den = lcm(den, c.get_den());
    }
    mpq_class scale(den, num);
    scale.canonicalize();
    if (leadingCoefficient() < 0) scale = -scale;
    return timesScalar(scale);
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpq_class a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (m.isOne()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << m.str();
        }
        first = false;
    }
    return os.str();
}

Polynomial partialDerivative(const Polynomial& f, std::size_t alpha) {
    Polynomial out(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        auto e = m.exponent(alpha);
        if (e == 0) continue;
        out.addTerm(m.divByVar(alpha), c * e);
    }
    return out;
}

}  // namespace borderlab
