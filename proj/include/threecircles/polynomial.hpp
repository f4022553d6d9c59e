#pragma once

// Dense univariate polynomials over Q and the transformations that
// compose into the Moebius transform.
//
// Coefficients are stored low-to-high. The zero polynomial is the empty
// sequence; every constructor strips trailing zeros, so size() is the
// number of stored coefficients and degree() = size() - 1 for nonzero p.
//
// The four building blocks:
//
//   taylor_shift(p, c)  = p(X + c)
//   scale_x(p, c)       = p(c X)
//   reciprocal(p, n)    = X^n p(1/X)
//   mobius(p, l, r, n)  = taylor_shift(reciprocal(scale_x(taylor_shift(p, l), r - l), n), 1)
//
// mobius(p, l, r) has the root z exactly when p has the root (r + l z)/(z + 1).

#include "threecircles/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace threecircles {

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> cs) : coeffs_(cs) { normalize(); }
    explicit Polynomial(std::vector<Rational> cs) : coeffs_(std::move(cs)) { normalize(); }

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    static Polynomial x() { return Polynomial({0, 1}); }
    /// c X^k
    static Polynomial monomial(const Rational& c, std::size_t k) {
        std::vector<Rational> cs(k + 1);
        cs[k] = c;
        return Polynomial(std::move(cs));
    }
    /// X - a
    static Polynomial linear_root(const Rational& a) { return Polynomial({-a, 1}); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const Rational& lead() const {
        if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    /// Coefficient of X^i; zero past the end.
    Rational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> out(std::max(a.size(), b.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<Rational> out(a.coeffs_);
        for (auto& c : out) c = -c;
        return Polynomial(std::move(out));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (sgn(a.coeffs_[i]) == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        if (sgn(c) == 0) return {};
        std::vector<Rational> out(p.coeffs_);
        for (auto& x : out) x *= c;
        return Polynomial(std::move(out));
    }

private:
    void normalize() {
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
inline Polynomial poly_scale(const Rational& c, const Polynomial& p) { return c * p; }

inline Polynomial pow(const Polynomial& p, unsigned k) {
    Polynomial out{1};
    for (unsigned i = 0; i < k; ++i) out = out * p;
    return out;
}

inline Rational poly_eval(const Polynomial& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline ComplexRational poly_eval_complex(const Polynomial& p, const ComplexRational& z) {
    ComplexRational acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * z + ComplexRational(*it);
    return acc;
}

inline bool is_root(const Polynomial& p, const ComplexRational& z) { return poly_eval_complex(p, z).is_zero(); }
inline bool is_root(const Polynomial& p, const Rational& x) { return sgn(poly_eval(p, x)) == 0; }

/// p(X + c).
inline Polynomial taylor_shift(const Polynomial& p, const Rational& c) {
    if (p.is_zero()) return p;
    // Horner in the shifted variable: acc <- acc * (X + c) + a_i.
    std::vector<Rational> acc;
    acc.reserve(p.size());
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc.insert(acc.begin(), Rational(0));
        for (std::size_t j = 0; j + 1 < acc.size(); ++j) acc[j] += c * acc[j + 1];
        acc[0] += *it;
    }
    return Polynomial(std::move(acc));
}

/// p(c X).
inline Polynomial scale_x(const Polynomial& p, const Rational& c) {
    std::vector<Rational> out(p.coeffs());
    Rational power = 1;
    for (auto& a : out) {
        a *= power;
        power *= c;
    }
    return Polynomial(std::move(out));
}

/// X^n p(1/X). The bound defaults to deg p.
inline Polynomial reciprocal(const Polynomial& p, std::optional<std::size_t> bound = std::nullopt) {
    if (p.is_zero()) throw std::invalid_argument("reciprocal of the zero polynomial");
    const std::size_t deg = p.size() - 1;
    const std::size_t n = bound.value_or(deg);
    if (n < deg) throw std::invalid_argument("reciprocal: degree bound below the degree");
    std::vector<Rational> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out[i] = p[n - i];
    return Polynomial(std::move(out));
}

/// (X + 1)^n p((r + l X)/(X + 1)); n defaults to deg p.
inline Polynomial mobius(const Polynomial& p, const Rational& l, const Rational& r,
                         std::optional<std::size_t> bound = std::nullopt) {
    if (!(l < r)) throw std::invalid_argument("mobius: need l < r");
    if (p.is_zero()) throw std::invalid_argument("mobius of the zero polynomial");
    return taylor_shift(reciprocal(scale_x(taylor_shift(p, l), r - l), bound), 1);
}

inline Polynomial derivative(const Polynomial& p) {
    if (p.size() <= 1) return {};
    std::vector<Rational> out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(out));
}

inline Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return Rational(1 / p.lead()) * p;
}

/// Euclidean division; returns (quotient, remainder).
inline std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (a.size() < b.size()) return {Polynomial{}, a};
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quot(a.size() - b.size() + 1);
    const Rational& lb = b.lead();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational q = rem[k + b.size() - 1] / lb;
        quot[k] = q;
        if (sgn(q) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= q * b.coeffs()[j];
    }
    rem.resize(b.size() - 1);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

/// Monic gcd; gcd(p, 0) = monic(p).
inline Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    Polynomial a = monic(p), b = monic(q);
    while (!b.is_zero()) {
        Polynomial r = monic(poly_divmod(a, b).second);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Monic p / gcd(p, p').
inline Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
    Polynomial g = poly_gcd(p, derivative(p));
    return monic(poly_divmod(p, g).first);
}

inline bool is_squarefree(const Polynomial& p) { return poly_gcd(p, derivative(p)).degree() == 0; }

struct SquarefreeFactor {
    unsigned multiplicity;
    Polynomial factor;  // monic, squarefree, nonconstant
};

/// Yun's algorithm: monic(p) = prod factor_i^i over the returned entries.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (p.degree() == 0) return out;
    Polynomial f = monic(p);
    Polynomial df = derivative(f);
    Polynomial a = poly_gcd(f, df);
    Polynomial b = poly_divmod(f, a).first;
    Polynomial c = poly_divmod(df, a).first;
    Polynomial d = c - derivative(b);
    for (unsigned i = 1; b.degree() > 0; ++i) {
        Polynomial g = poly_gcd(b, d);
        if (g.degree() > 0) out.push_back({i, g});
        b = poly_divmod(b, g).first;
        c = poly_divmod(d, g).first;
        d = c - derivative(b);
    }
    return out;
}

// Text format: comma-separated rationals low-to-high, e.g. "2/9,-1,1".

inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += to_string(p.coeffs()[i]);
    }
    return out;
}

inline Polynomial parse_polynomial(std::string_view text) {
    std::vector<Rational> cs;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        cs.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Polynomial(std::move(cs));
}

}  // namespace threecircles
