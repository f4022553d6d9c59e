#pragma once

// Exact rationals (GMP-backed) and Gaussian rationals Q[i].
//
// Rational is mpq_class. Every arithmetic result of gmpxx is already in
// canonical form (reduced, positive denominator), so the invariant holds
// as long as values are built through parse_rational() or arithmetic.

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace threecircles {

using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

inline Integer parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace detail

/// Parses `int` or `int/int` (surrounding whitespace ignored) into canonical form.
inline Rational parse_rational(std::string_view text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    std::string_view s = compact;
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse_integer(s));
    Integer num = detail::parse_integer(s.substr(0, slash));
    auto den_text = s.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw std::invalid_argument("signed denominator in '" + std::string(text) + "'");
    Integer den = detail::parse_integer(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// A point of Q[i].
struct ComplexRational {
    Rational re;
    Rational im;

    ComplexRational() = default;
    ComplexRational(Rational re_, Rational im_ = 0) : re(std::move(re_)), im(std::move(im_)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    ComplexRational conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }

    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
        Rational d = b.norm2();
        if (sgn(d) == 0) throw std::domain_error("complex division by zero");
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
};

inline std::string to_string(const ComplexRational& z) {
    std::string s = to_string(z.re);
    if (sgn(z.im) < 0)
        s += "-" + to_string(Rational(-z.im)) + "i";
    else
        s += "+" + to_string(z.im) + "i";
    return s;
}

}  // namespace threecircles
