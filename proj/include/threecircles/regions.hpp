#pragma once

// Exact membership tests for the discs attached to an interval (l, r).
//
// With E0(x + iy) = x^2 - (l + r) x + y^2 + l r:
//
//   C0       open disc on the diameter (l, r)          E0 < 0
//   C1, C2   circumdiscs of the equilateral triangles  E0 -/+ (r - l) y / sqrt(3) < 0
// on (l, r), above and below
//   B        closed region Re z <= 0, Im^2 <= 3 Re^2
//
// Obreshkoff discs generalise C1/C2: the two open discs through l and r
// whose centres see the segment under the angle 2 pi / (k + 2). The centre
// sits at height h_k = (r - l)/2 * cot(pi / (k + 2)) and the upper disc is
// E0 - 2 h_k y < 0. For k in {0, 1, 2, 4} the cotangent is 0, 1/sqrt(3), 1
// or sqrt(3) and the test is exact; other k go through an MPFR enclosure of
// the cotangent that is refined until the sign is settled or the precision
// budget runs out.

#include "threecircles/rational.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace threecircles {

/// Open real interval (l, r) with l < r.
class IntervalLR {
public:
    IntervalLR(Rational l, Rational r) : l_(std::move(l)), r_(std::move(r)) {
        if (!(l_ < r_)) throw std::invalid_argument("interval needs l < r");
    }
    const Rational& l() const { return l_; }
    const Rational& r() const { return r_; }
    Rational width() const { return r_ - l_; }
    Rational midpoint() const { return (l_ + r_) / 2; }
    bool contains(const Rational& x) const { return l_ < x && x < r_; }

    friend bool operator==(const IntervalLR&, const IntervalLR&) = default;

private:
    Rational l_;
    Rational r_;
};

enum class Membership { Inside, Outside, Boundary, Undecided };

inline const char* to_string(Membership m) {
    switch (m) {
        case Membership::Inside: return "inside";
        case Membership::Outside: return "outside";
        case Membership::Boundary: return "boundary";
        case Membership::Undecided: return "undecided";
    }
    return "?";
}

inline Membership from_sign(int s) {
    return s < 0 ? Membership::Inside : (s > 0 ? Membership::Outside : Membership::Boundary);
}

/// Union of two open sets, given the verdict for each.
inline Membership unite(Membership a, Membership b) {
    using M = Membership;
    if (a == M::Inside || b == M::Inside) return M::Inside;
    if (a == M::Undecided || b == M::Undecided) return M::Undecided;
    if (a == M::Boundary || b == M::Boundary) return M::Boundary;
    return M::Outside;
}

inline Membership intersect(Membership a, Membership b) {
    using M = Membership;
    if (a == M::Outside || b == M::Outside) return M::Outside;
    if (a == M::Undecided || b == M::Undecided) return M::Undecided;
    if (a == M::Boundary || b == M::Boundary) return M::Boundary;
    return M::Inside;
}

/// Sign of A sqrt(3) + B.
inline int surd_sign(const Rational& a, const Rational& b) {
    const int sa = sgn(a), sb = sgn(b);
    if (sa == 0) return sb;
    if (sb == 0 || sa == sb) return sa;
    const int cmp = ::cmp(Rational(3 * a * a), Rational(b * b));
    if (cmp > 0) return sa;
    if (cmp < 0) return sb;
    return 0;
}

/// x^2 - (l + r) x + y^2 + l r
inline Rational c0_expression(const ComplexRational& z, const IntervalLR& iv) {
    return z.re * z.re - (iv.l() + iv.r()) * z.re + z.im * z.im + iv.l() * iv.r();
}

inline Membership in_C0(const ComplexRational& z, const IntervalLR& iv) { return from_sign(sgn(c0_expression(z, iv))); }

/// Closed complement of C0.
inline bool notin_C0(const ComplexRational& z, const IntervalLR& iv) { return sgn(c0_expression(z, iv)) >= 0; }

inline Membership in_C12(const ComplexRational& z, const IntervalLR& iv) {
    // 3 (E0 -/+ (r - l) y / sqrt 3) = 3 E0 -/+ sqrt(3) (r - l) y
    const Rational e3 = 3 * c0_expression(z, iv);
    const Rational wy = iv.width() * z.im;
    return unite(from_sign(surd_sign(-wy, e3)), from_sign(surd_sign(wy, e3)));
}

inline Membership in_B(const ComplexRational& z) {
    const int re = sgn(z.re);
    const int gap = ::cmp(Rational(z.im * z.im), Rational(3 * z.re * z.re));  // <= 0 required
    if (re > 0 || gap > 0) return Membership::Outside;
    if (re == 0 || gap == 0) return Membership::Boundary;
    return Membership::Inside;
}

/// Closed region test, for callers that only need a yes/no.
inline bool inB(const ComplexRational& z) { return in_B(z) != Membership::Outside; }

/// (r + l z) / (z + 1)
inline ComplexRational mobius_point(const ComplexRational& z, const IntervalLR& iv) {
    const ComplexRational den = z + ComplexRational(1);
    if (den.is_zero()) throw std::domain_error("mobius_point: pole at z = -1");
    return (ComplexRational(iv.r()) + ComplexRational(iv.l()) * z) / den;
}

/// (r - w) / (w - l), the inverse of mobius_point.
inline ComplexRational inverse_point(const ComplexRational& w, const IntervalLR& iv) {
    const ComplexRational den = w - ComplexRational(iv.l());
    if (den.is_zero()) throw std::domain_error("inverse_point: pole at w = l");
    return (ComplexRational(iv.r()) - w) / den;
}

struct ObreshkoffIndex {
    unsigned k = 0;
};

enum class DiscPart { Upper, Lower, Area, Lens };

inline constexpr unsigned kDefaultPrecisionBits = 256;

inline bool has_exact_cotangent(ObreshkoffIndex idx) { return idx.k == 0 || idx.k == 1 || idx.k == 2 || idx.k == 4; }

namespace detail {

class MpfrValue {
public:
    explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~MpfrValue() { mpfr_clear(v_); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
    mpfr_ptr get() { return v_; }
    Rational to_rational() const {
        Rational q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }

private:
    mpfr_t v_;
};

/// Sign of E0 - s (r - l) y cot(pi/(k+2)) for s = +1 (upper disc) or -1 (lower), exact k only.
inline int exact_disc_sign(const Rational& e0, const Rational& wy, unsigned k) {
    switch (k) {
        case 0: return sgn(e0);
        case 1: return surd_sign(e0, Rational(-wy));  // sqrt(3) * (E0 - wy / sqrt 3)
        case 2: return sgn(Rational(e0 - wy));
        case 4: return surd_sign(Rational(-wy), e0);
    }
    throw std::logic_error("no exact cotangent for this k");
}

}  // namespace detail

/// Rational enclosure [lo, hi] of cot(pi / m) for m >= 2, from directed-rounding MPFR.
inline std::pair<Rational, Rational> cot_pi_over_enclosure(unsigned m, mpfr_prec_t prec) {
    if (m < 2) throw std::invalid_argument("cot(pi/m) needs m >= 2");
    detail::MpfrValue x_lo(prec), x_hi(prec), c_lo(prec), c_hi(prec);
    mpfr_const_pi(x_lo.get(), MPFR_RNDD);
    mpfr_div_ui(x_lo.get(), x_lo.get(), m, MPFR_RNDD);
    mpfr_const_pi(x_hi.get(), MPFR_RNDU);
    mpfr_div_ui(x_hi.get(), x_hi.get(), m, MPFR_RNDU);
    // cot is decreasing on (0, pi).
    mpfr_cot(c_hi.get(), x_lo.get(), MPFR_RNDU);
    mpfr_cot(c_lo.get(), x_hi.get(), MPFR_RNDD);
    return {c_lo.to_rational(), c_hi.to_rational()};
}

/// Single Obreshkoff disc via the cotangent enclosure, whatever k is.
inline Membership obreshkoff_disc_adaptive(const ComplexRational& z, const IntervalLR& iv, ObreshkoffIndex idx,
                                           bool upper, unsigned precision_bits = kDefaultPrecisionBits) {
    const Rational e0 = c0_expression(z, iv);
    const Rational wy = upper ? Rational(iv.width() * z.im) : Rational(-iv.width() * z.im);
    if (sgn(wy) == 0) return from_sign(sgn(e0));
    for (unsigned prec = std::min(64u, precision_bits);; prec = std::min(2 * prec, precision_bits)) {
        auto [lo, hi] = cot_pi_over_enclosure(idx.k + 2, static_cast<mpfr_prec_t>(prec));
        const int s_lo = sgn(Rational(e0 - wy * lo));
        const int s_hi = sgn(Rational(e0 - wy * hi));
        if (s_lo == s_hi && s_lo != 0) return from_sign(s_lo);
        if (prec >= precision_bits) return Membership::Undecided;
    }
}

inline Membership obreshkoff_disc(const ComplexRational& z, const IntervalLR& iv, ObreshkoffIndex idx, bool upper,
                                  unsigned precision_bits = kDefaultPrecisionBits) {
    if (!has_exact_cotangent(idx)) return obreshkoff_disc_adaptive(z, iv, idx, upper, precision_bits);
    const Rational wy = upper ? Rational(iv.width() * z.im) : Rational(-iv.width() * z.im);
    return from_sign(detail::exact_disc_sign(c0_expression(z, iv), wy, idx.k));
}

inline Membership obreshkoff_membership(const ComplexRational& z, const IntervalLR& iv, ObreshkoffIndex idx,
                                        DiscPart which, unsigned precision_bits = kDefaultPrecisionBits) {
    switch (which) {
        case DiscPart::Upper: return obreshkoff_disc(z, iv, idx, true, precision_bits);
        case DiscPart::Lower: return obreshkoff_disc(z, iv, idx, false, precision_bits);
        case DiscPart::Area:
            return unite(obreshkoff_disc(z, iv, idx, true, precision_bits),
                         obreshkoff_disc(z, iv, idx, false, precision_bits));
        case DiscPart::Lens:
            return intersect(obreshkoff_disc(z, iv, idx, true, precision_bits),
                             obreshkoff_disc(z, iv, idx, false, precision_bits));
    }
    throw std::logic_error("unknown disc part");
}

/// Height of the upper Obreshkoff disc centre above the real axis (drawing only).
inline double obreshkoff_center_height(double l, double r, unsigned k) {
    if (k == 0) return 0.0;
    return (r - l) / 2.0 / std::tan(std::numbers::pi / static_cast<double>(k + 2));
}

}  // namespace threecircles
