#pragma once

// Normal polynomials.
//
// A polynomial is normal when its coefficients are nonnegative, its leading
// coefficient is positive, the sequence is log-concave
// (a_{i-1} a_{i+1} <= a_i^2) and, once a coefficient is positive, every
// later one is too. normal_seq() is the canonical recursive predicate;
// normal_via_properties() checks the four conditions one by one and is kept
// as an oracle that can say which condition broke.

#include "threecircles/polynomial.hpp"
#include "threecircles/signs.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>

namespace threecircles {

/// Recursive definition over the coefficient list:
///   []          -> false
///   [a]         -> 0 < a
///   [a, b]      -> 0 <= a && 0 < b
///   a::b::c::_  -> normal_seq(b::c::_) && (a == 0 || (a c <= b^2 && 0 < a && 0 < b))
inline bool normal_seq(std::span<const Rational> s) {
    if (s.empty()) return false;
    if (s.size() == 1) return sgn(s[0]) > 0;
    if (s.size() == 2) return sgn(s[0]) >= 0 && sgn(s[1]) > 0;
    if (!normal_seq(s.subspan(1))) return false;
    const auto &a = s[0], &b = s[1], &c = s[2];
    return sgn(a) == 0 || (a * c <= b * b && sgn(a) > 0 && sgn(b) > 0);
}

inline bool is_normal(const Polynomial& p) { return normal_seq(p.coeffs()); }

struct NormalVerdict {
    bool is_normal = false;
    std::optional<std::size_t> failing_index;
    /// 1: negative coefficient, 2: leading coefficient not positive,
    /// 3: log-concavity, 4: zero after a positive coefficient. 0 when normal.
    int failed_condition = 0;
};

inline NormalVerdict normal_via_properties(const Polynomial& p) {
    const auto& a = p.coeffs();
    if (a.empty()) return {false, 0, 2};
    // Scan by index so the reported index is the first offending one.
    bool seen_positive = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const bool last = i + 1 == a.size();
        if (sgn(a[i]) < 0) return {false, i, 1};
        if (last && sgn(a[i]) <= 0) return {false, i, 2};
        if (seen_positive && sgn(a[i]) == 0) return {false, i, 4};
        if (i > 0 && !last && a[i - 1] * a[i + 1] > a[i] * a[i]) return {false, i, 3};
        seen_positive = seen_positive || sgn(a[i]) > 0;
    }
    return {true, std::nullopt, 0};
}

/// X^2 - 2 Re(z) X + |z|^2, the real quadratic with roots z and conj(z).
inline Polynomial quad_from_conjugate_pair(const ComplexRational& z) {
    return Polynomial{z.norm2(), Rational(-2 * z.re), 1};
}

/// sign_changes of p (X - a); equals 1 whenever a > 0, p is normal and p(0) != 0.
inline std::size_t normal_changes_value(const Polynomial& p, const Rational& a) {
    if (sgn(a) <= 0) throw std::invalid_argument("normal_changes_value: need a > 0");
    if (!is_normal(p)) throw std::invalid_argument("normal_changes_value: polynomial is not normal");
    if (sgn(p[0]) == 0) throw std::invalid_argument("normal_changes_value: 0 is a root");
    return sign_changes(p * Polynomial::linear_root(a));
}

}  // namespace threecircles
