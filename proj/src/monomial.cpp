#include "borderlab/monomial.hpp"

#include <algorithm>
#include <sstream>

namespace borderlab {

namespace {

constexpr Monomial::Exp kMaxExp = 1 << 20;

void checkSameN(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) {
        throw DimensionError("monomials over different variable counts: " +
                             std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()));
    }
}

}  // namespace

Monomial::Monomial(std::vector<Exp> exps) : exps_(std::move(exps)) {
    for (Exp e : exps_) {
        if (e < 0) throw ArgumentError("negative exponent in monomial");
        if (e > kMaxExp) throw ArgumentError("exponent overflow in monomial");
    }
}

Monomial Monomial::variable(std::size_t n, std::size_t var, Exp power) {
    if (var < 1 || var > n) throw ArgumentError("variable index out of range");
    if (power < 0 || power > kMaxExp) throw ArgumentError("bad exponent");
    Monomial m(n);
    m.exps_[var - 1] = power;
    return m;
}

long Monomial::degree() const {
    long d = 0;
    for (Exp e : exps_) d += e;
    return d;
}

std::pair<long, long> Monomial::degreeSplit(std::size_t kappa) const {
    if (kappa < 1 || kappa >= nvars()) {
        throw ArgumentError("kappa out of range: need 1 <= kappa < n");
    }
    long front = 0, back = 0;
    std::size_t split = nvars() - kappa;  // front variables are x_1..x_{n-kappa}
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        (i < split ? front : back) += exps_[i];
    }
    return {front, back};
}

bool Monomial::isOne() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exp e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    checkSameN(*this, rhs);
    Monomial out(nvars());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        out.exps_[i] = exps_[i] + rhs.exps_[i];
        if (out.exps_[i] > kMaxExp) throw ArgumentError("exponent overflow in product");
    }
    return out;
}

Monomial Monomial::timesVar(std::size_t var) const {
    Monomial out = *this;
    if (++out.exps_[var - 1] > kMaxExp) throw ArgumentError("exponent overflow in product");
    return out;
}

Monomial Monomial::operator/(const Monomial& rhs) const {
    checkSameN(*this, rhs);
    Monomial out(nvars());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (rhs.exps_[i] > exps_[i]) throw ArgumentError("inexact monomial division");
        out.exps_[i] = exps_[i] - rhs.exps_[i];
    }
    return out;
}

Monomial Monomial::divByVar(std::size_t var) const {
    if (exps_[var - 1] == 0) throw ArgumentError("inexact monomial division");
    Monomial out = *this;
    --out.exps_[var - 1];
    return out;
}

std::string Monomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!first) os << '*';
        os << 'x' << (i + 1);
        if (exps_[i] > 1) os << '^' << exps_[i];
        first = false;
    }
    if (first) return "1";
    return os.str();
}

Monomial Monomial::parse(const std::string& text, std::size_t n) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw ArgumentError("empty monomial string");
    if (s == "1") return Monomial::one(n);
    Monomial out(n);
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != 'x') throw ArgumentError("bad monomial syntax: '" + text + "'");
        ++pos;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ArgumentError("missing variable index in '" + text + "'");
        std::size_t var = std::stoul(s.substr(start, pos - start));
        if (var < 1 || var > n) {
            throw ArgumentError("variable x" + std::to_string(var) + " out of range in '" + text + "'");
        }
        long e = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) throw ArgumentError("missing exponent in '" + text + "'");
            e = std::stol(s.substr(start, pos - start));
        }
        if (e <= 0 || e > kMaxExp) throw ArgumentError("bad exponent in '" + text + "'");
        out.exps_[var - 1] += static_cast<Exp>(e);
        if (pos < s.size()) {
            if (s[pos] != '*') throw ArgumentError("bad monomial syntax: '" + text + "'");
            ++pos;
            if (pos == s.size()) throw ArgumentError("trailing '*' in '" + text + "'");
        }
    }
    return out;
}

int lexCompare(const Monomial& a, const Monomial& b) {
    checkSameN(a, b);
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        if (ea[i] != eb[i]) return ea[i] > eb[i] ? 1 : -1;
    }
    return 0;
}

bool divides(const Monomial& a, const Monomial& b) {
    checkSameN(a, b);
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        if (ea[i] > eb[i]) return false;
    }
    return true;
}

bool canonicalLess(const Monomial& a, const Monomial& b) {
    long da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return lexCompare(a, b) > 0;
}

std::vector<Monomial> monomialsOfDegree(std::size_t n, long degree,
                                        std::size_t first, std::size_t last) {
    if (first < 1 || last > n || first > last) throw ArgumentError("bad variable window");
    std::vector<Monomial> out;
    std::vector<Monomial::Exp> cur(n, 0);
    // Recursive descent assigning the largest exponent to the smallest
    // variable index first yields lex-descending order.
    auto rec = [&](auto&& self, std::size_t var, long remaining) -> void {
        if (var == last) {
            cur[var - 1] = static_cast<Monomial::Exp>(remaining);
            out.emplace_back(cur);
            cur[var - 1] = 0;
            return;
        }
        for (long e = remaining; e >= 0; --e) {
            cur[var - 1] = static_cast<Monomial::Exp>(e);
            self(self, var + 1, remaining - e);
        }
        cur[var - 1] = 0;
    };
    if (degree < 0) return out;
    rec(rec, first, degree);
    return out;
}

}  // namespace borderlab
