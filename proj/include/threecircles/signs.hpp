#pragma once

// Sign-variation counting over rational sequences and the Bernstein
// coefficients obtained from the Moebius transform.
//
// changes() counts adjacent pairs with a strictly negative product, which
// undercounts across zeros: changes([-1, 0, 1]) == 0. Anything that needs
// the true number of variations must go through sign_changes(), which drops
// zeros first.

#include "threecircles/polynomial.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace threecircles {

using SignSeq = std::vector<Rational>;

inline std::size_t changes(std::span<const Rational> s) {
    std::size_t count = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (sgn(s[i]) * sgn(s[i + 1]) < 0) ++count;
    return count;
}

inline SignSeq seqn0(std::span<const Rational> s) {
    SignSeq out;
    for (const auto& x : s)
        if (sgn(x) != 0) out.push_back(x);
    return out;
}

inline std::size_t sign_changes(std::span<const Rational> s) { return changes(seqn0(s)); }
inline std::size_t sign_changes(const Polynomial& p) { return sign_changes(p.coeffs()); }

/// s without its first and last items; empty when size < 2.
inline SignSeq mid(std::span<const Rational> s) {
    if (s.size() < 2) return {};
    return SignSeq(s.begin() + 1, s.end() - 1);
}

inline SignSeq seqmul(std::span<const Rational> s, std::span<const Rational> t) {
    if (s.size() != t.size()) throw std::invalid_argument("seqmul: length mismatch");
    SignSeq out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] * t[i];
    return out;
}

inline bool all_pos(std::span<const Rational> s) {
    for (const auto& x : s)
        if (sgn(x) <= 0) return false;
    return true;
}

inline bool all_neq0(std::span<const Rational> s) {
    for (const auto& x : s)
        if (sgn(x) == 0) return false;
    return true;
}

/// Weakly increasing.
inline bool increasing(std::span<const Rational> s) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] > s[i + 1]) return false;
    return true;
}

/// [p_k / p_{k+1} - a for k = 0 .. deg p - 1]; requires nonzero coefficients.
inline SignSeq spseq(const Polynomial& p, const Rational& a) {
    SignSeq out;
    const auto& cs = p.coeffs();
    for (std::size_t k = 0; k + 1 < cs.size(); ++k) {
        if (sgn(cs[k]) == 0 || sgn(cs[k + 1]) == 0) throw std::invalid_argument("spseq: zero coefficient");
        out.push_back(cs[k] / cs[k + 1] - a);
    }
    return out;
}

/// Pascal row n.
inline std::vector<Integer> binomial_row(std::size_t n) {
    std::vector<Integer> row{1};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<Integer> next(k + 1);
        next[0] = next[k] = 1;
        for (std::size_t i = 1; i < k; ++i) next[i] = row[i - 1] + row[i];
        row = std::move(next);
    }
    return row;
}

/// Coefficients b in the basis B_{n,i,l,r} = C(n,i) (X-l)^i (r-X)^(n-i) / (r-l)^n.
struct BernsteinCoeffs {
    std::size_t n = 0;
    Rational l;
    Rational r;
    std::vector<Rational> b;
};

/// b_i = c_{n-i} / C(n,i), where c are the coefficients of mobius(p, l, r, n).
inline BernsteinCoeffs bernstein_coeffs(const Polynomial& p, const Rational& l, const Rational& r, std::size_t n) {
    if (!(l < r)) throw std::invalid_argument("bernstein_coeffs: need l < r");
    if (p.degree() > static_cast<long>(n)) throw std::invalid_argument("bernstein_coeffs: degree exceeds basis degree");
    BernsteinCoeffs out{n, l, r, std::vector<Rational>(n + 1)};
    if (p.is_zero()) return out;
    Polynomial c = mobius(p, l, r, n);
    auto binom = binomial_row(n);
    for (std::size_t i = 0; i <= n; ++i) out.b[i] = c[n - i] / Rational(binom[i]);
    return out;
}

/// Sum b_i B_{n,i,l,r} expanded directly in the monomial basis.
inline Polynomial bernstein_expand(const BernsteinCoeffs& bc) {
    if (!(bc.l < bc.r)) throw std::invalid_argument("bernstein_expand: need l < r");
    if (bc.b.size() != bc.n + 1) throw std::invalid_argument("bernstein_expand: expected n+1 coefficients");
    auto binom = binomial_row(bc.n);
    const Polynomial up = Polynomial::linear_root(bc.l);  // X - l
    const Polynomial down{bc.r, -1};                     // r - X
    Rational width_pow = 1;
    for (std::size_t i = 0; i < bc.n; ++i) width_pow *= bc.r - bc.l;
    Polynomial sum;
    for (std::size_t i = 0; i <= bc.n; ++i) {
        if (sgn(bc.b[i]) == 0) continue;
        Rational w = bc.b[i] * Rational(binom[i]) / width_pow;
        sum = sum + w * (pow(up, static_cast<unsigned>(i)) * pow(down, static_cast<unsigned>(bc.n - i)));
    }
    return sum;
}

}  // namespace threecircles
