#pragma once

// Empirical validation of the three-circles assertions and of the
// Obreshkoff interval bound on polynomials built from exact roots.
//
// Roots are prescribed, never computed, so every region test is exact.
// An instance whose roots touch a disc boundary (or whose adaptive
// Obreshkoff test stays undecided) is skipped; an instance that violates
// the hypotheses outright is rejected. Neither counts as a failure.

#include "threecircles/isolator.hpp"
#include "threecircles/normal.hpp"
#include "threecircles/polynomial.hpp"
#include "threecircles/regions.hpp"
#include "threecircles/signs.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

namespace threecircles {

struct RealRoot {
    Rational value;
    unsigned multiplicity = 1;
    friend bool operator==(const RealRoot&, const RealRoot&) = default;
};

/// re +/- i im with im > 0; the conjugate is implicit.
struct ConjugatePair {
    Rational re;
    Rational im;
    unsigned multiplicity = 1;
    friend bool operator==(const ConjugatePair&, const ConjugatePair&) = default;
};

struct RootSpec {
    std::vector<RealRoot> real_roots;
    std::vector<ConjugatePair> complex_pairs;
    Rational leading = 1;

    friend bool operator==(const RootSpec&, const RootSpec&) = default;

    void validate() const {
        if (sgn(leading) == 0) throw std::invalid_argument("root spec: zero leading coefficient");
        for (const auto& rr : real_roots)
            if (rr.multiplicity < 1) throw std::invalid_argument("root spec: multiplicity must be >= 1");
        for (const auto& cp : complex_pairs) {
            if (cp.multiplicity < 1) throw std::invalid_argument("root spec: multiplicity must be >= 1");
            if (sgn(cp.im) <= 0) throw std::invalid_argument("root spec: pair needs im > 0");
        }
    }

    std::size_t degree() const {
        std::size_t d = 0;
        for (const auto& rr : real_roots) d += rr.multiplicity;
        for (const auto& cp : complex_pairs) d += 2 * cp.multiplicity;
        return d;
    }

    /// Every root as a point of Q[i] with its multiplicity, conjugates listed separately.
    std::vector<std::pair<ComplexRational, unsigned>> points() const {
        std::vector<std::pair<ComplexRational, unsigned>> out;
        for (const auto& rr : real_roots) out.emplace_back(ComplexRational(rr.value), rr.multiplicity);
        for (const auto& cp : complex_pairs) {
            out.emplace_back(ComplexRational(cp.re, cp.im), cp.multiplicity);
            out.emplace_back(ComplexRational(cp.re, -cp.im), cp.multiplicity);
        }
        return out;
    }

    bool has_root(const Rational& x) const {
        return std::any_of(real_roots.begin(), real_roots.end(), [&](const RealRoot& rr) { return rr.value == x; });
    }
};

/// leading * prod (X - a)^m * prod (X^2 - 2 re X + re^2 + im^2)^m
inline Polynomial poly_from_roots(const RootSpec& spec) {
    spec.validate();
    Polynomial p = Polynomial::constant(spec.leading);
    for (const auto& rr : spec.real_roots) p = p * pow(Polynomial::linear_root(rr.value), rr.multiplicity);
    for (const auto& cp : spec.complex_pairs)
        p = p * pow(quad_from_conjugate_pair({cp.re, cp.im}), cp.multiplicity);
    return p;
}

// Line format:
//   real <q> x<mult>
//   pair <re> <im> x<mult>
//   leading <c>
// Blank lines and lines starting with '#' are ignored.

inline std::string to_text(const RootSpec& spec) {
    std::string out;
    for (const auto& rr : spec.real_roots)
        out += "real " + to_string(rr.value) + " x" + std::to_string(rr.multiplicity) + "\n";
    for (const auto& cp : spec.complex_pairs)
        out += "pair " + to_string(cp.re) + " " + to_string(cp.im) + " x" + std::to_string(cp.multiplicity) + "\n";
    out += "leading " + to_string(spec.leading) + "\n";
    return out;
}

namespace detail {

inline unsigned parse_multiplicity(const std::string& tok) {
    if (tok.size() < 2 || tok[0] != 'x') throw std::invalid_argument("root spec: bad multiplicity '" + tok + "'");
    Integer m = parse_integer(std::string_view(tok).substr(1));
    if (m < 1 || m > 1000000) throw std::invalid_argument("root spec: bad multiplicity '" + tok + "'");
    return static_cast<unsigned>(m.get_ui());
}

}  // namespace detail

inline RootSpec parse_root_spec(std::string_view text) {
    RootSpec spec;
    bool saw_leading = false;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty() || tok[0].starts_with('#')) continue;
        try {
            if (tok[0] == "real" && (tok.size() == 2 || tok.size() == 3)) {
                spec.real_roots.push_back(
                    {parse_rational(tok[1]), tok.size() == 3 ? detail::parse_multiplicity(tok[2]) : 1u});
            } else if (tok[0] == "pair" && (tok.size() == 3 || tok.size() == 4)) {
                spec.complex_pairs.push_back({parse_rational(tok[1]), parse_rational(tok[2]),
                                              tok.size() == 4 ? detail::parse_multiplicity(tok[3]) : 1u});
            } else if (tok[0] == "leading" && tok.size() == 2 && !saw_leading) {
                spec.leading = parse_rational(tok[1]);
                saw_leading = true;
            } else {
                throw std::invalid_argument("unrecognised entry");
            }
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("root spec line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    spec.validate();
    return spec;
}

enum class CheckStatus { Passed, Failed, Skipped, Rejected };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Passed: return "passed";
        case CheckStatus::Failed: return "failed";
        case CheckStatus::Skipped: return "skipped";
        case CheckStatus::Rejected: return "rejected";
    }
    return "?";
}

/// Verdict on one instance. observed_v is only meaningful for Passed/Failed.
struct CheckOutcome {
    CheckStatus status = CheckStatus::Rejected;
    std::size_t observed_v = 0;
    std::string expected;
};

namespace detail {

inline CheckOutcome verdict(bool ok, std::size_t v, std::string expected) {
    return {ok ? CheckStatus::Passed : CheckStatus::Failed, v, std::move(expected)};
}

}  // namespace detail

/// No root in C0 => the Moebius transform of P has no sign variation.
inline CheckOutcome check_case1(const RootSpec& spec, const IntervalLR& iv) {
    bool boundary = false;
    for (const auto& [z, m] : spec.points()) {
        const Membership mem = in_C0(z, iv);
        if (mem == Membership::Inside) return {CheckStatus::Rejected, 0, "v = 0"};
        boundary = boundary || mem == Membership::Boundary;
    }
    if (boundary) return {CheckStatus::Skipped, 0, "v = 0"};
    const std::size_t v = descartes_count(poly_from_roots(spec), iv);
    return detail::verdict(v == 0, v, "v = 0");
}

/// P = poly(spec) * (X - a) with a in (l, r) and every other root outside
/// C1 u C2 => exactly one sign variation.
inline CheckOutcome check_case2(const RootSpec& spec, const IntervalLR& iv, const Rational& a) {
    if (!iv.contains(a) || spec.has_root(a) || spec.has_root(iv.r())) return {CheckStatus::Rejected, 0, "v = 1"};
    bool boundary = false;
    for (const auto& [z, m] : spec.points()) {
        const Membership mem = in_C12(z, iv);
        if (mem == Membership::Inside) return {CheckStatus::Rejected, 0, "v = 1"};
        boundary = boundary || mem == Membership::Boundary;
    }
    if (boundary) return {CheckStatus::Skipped, 0, "v = 1"};
    const Polynomial full = poly_from_roots(spec) * Polynomial::linear_root(a);
    const std::size_t v = sign_changes(mobius(full, iv.l(), iv.r()));
    return detail::verdict(v == 1, v, "v = 1");
}

struct ObreshkoffCounts {
    std::size_t in_lens = 0;  // roots in L_{n - p_count}, with multiplicity
    std::size_t in_area = 0;  // roots in A_{q_count}, with multiplicity
    bool inconclusive = false;
};

inline ObreshkoffCounts obreshkoff_counts(const RootSpec& spec, const IntervalLR& iv, std::size_t p_count,
                                          std::size_t q_count, unsigned precision_bits = kDefaultPrecisionBits) {
    ObreshkoffCounts out;
    const std::size_t n = spec.degree();
    for (const auto& [z, m] : spec.points()) {
        if (p_count > 0 && p_count <= n) {
            const Membership lens =
                obreshkoff_membership(z, iv, {static_cast<unsigned>(n - p_count)}, DiscPart::Lens, precision_bits);
            if (lens == Membership::Inside) out.in_lens += m;
            out.inconclusive = out.inconclusive || lens == Membership::Boundary || lens == Membership::Undecided;
        }
        const Membership area =
            obreshkoff_membership(z, iv, {static_cast<unsigned>(q_count)}, DiscPart::Area, precision_bits);
        if (area == Membership::Inside) out.in_area += m;
        out.inconclusive = out.inconclusive || area == Membership::Boundary || area == Membership::Undecided;
    }
    return out;
}

/// Passed when the hypotheses hold, Skipped on a boundary/undecided root, Rejected otherwise.
inline CheckStatus obreshkoff_hypotheses(const RootSpec& spec, const IntervalLR& iv, std::size_t p_count,
                                         std::size_t q_count, unsigned precision_bits = kDefaultPrecisionBits) {
    if (p_count > spec.degree()) return CheckStatus::Rejected;
    const ObreshkoffCounts c = obreshkoff_counts(spec, iv, p_count, q_count, precision_bits);
    if (c.inconclusive) return CheckStatus::Skipped;
    if (c.in_lens < p_count || c.in_area > q_count) return CheckStatus::Rejected;
    return CheckStatus::Passed;
}

/// At least p_count roots in the lens L_{n - p_count} and at most q_count
/// roots in the area A_{q_count} => p_count <= v <= q_count.
inline CheckOutcome check_obreshkoff(const RootSpec& spec, const IntervalLR& iv, std::size_t p_count,
                                     std::size_t q_count, unsigned precision_bits = kDefaultPrecisionBits) {
    std::string expected = std::to_string(p_count) + " <= v <= " + std::to_string(q_count);
    const CheckStatus pre = obreshkoff_hypotheses(spec, iv, p_count, q_count, precision_bits);
    if (pre != CheckStatus::Passed) return {pre, 0, std::move(expected)};
    const std::size_t v = descartes_count(poly_from_roots(spec), iv);
    return detail::verdict(p_count <= v && v <= q_count, v, std::move(expected));
}

// ---------------------------------------------------------------------------
// Seeded instance generators.

struct GeneratorOptions {
    unsigned max_denominator = 64;
    std::size_t budget = 10000;  // rejected samples tolerated per instance
};

class GeneratorExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class T>
struct Generated {
    T value;
    std::size_t rejections = 0;
};

struct Case2Instance {
    RootSpec spec;
    Rational a;
};

struct ObreshkoffInstance {
    RootSpec spec;
    std::size_t p_count = 0;
    std::size_t q_count = 0;
};

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of trial i in a campaign seeded with `seed`.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(seed + index); }

namespace detail {

inline long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Rational with denominator <= max_den in the closed range [lo, hi].
inline Rational sample_rational(Rng& rng, const Rational& lo, const Rational& hi, unsigned max_den) {
    const long den = uniform_int(rng, 1, max_den);
    Rational a = lo * den, b = hi * den;
    Integer num_lo, num_hi;
    mpz_cdiv_q(num_lo.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    mpz_fdiv_q(num_hi.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    if (num_lo > num_hi) return lo;
    const long num = uniform_int(rng, num_lo.get_si(), num_hi.get_si());
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// l + u (r - l) with u sampled in [u_lo, u_hi].
inline Rational sample_relative(Rng& rng, const IntervalLR& iv, const Rational& u_lo, const Rational& u_hi,
                                unsigned max_den) {
    return iv.l() + sample_rational(rng, u_lo, u_hi, max_den) * iv.width();
}

inline Rational sample_leading(Rng& rng) {
    long num = 0;
    while (num == 0) num = uniform_int(rng, -9, 9);
    Rational q(num, uniform_int(rng, 1, 9));
    q.canonicalize();
    return q;
}

inline unsigned sample_multiplicity(Rng& rng, std::size_t room, std::size_t per_unit) {
    if (room >= 2 * per_unit && uniform_int(rng, 0, 4) == 0) return 2;
    return 1;
}

class Budget {
public:
    explicit Budget(std::size_t limit) : limit_(limit) {}
    void reject(const char* what) {
        if (++used_ >= limit_) throw GeneratorExhausted(std::string("generator budget exhausted: ") + what);
    }
    std::size_t used() const { return used_; }

private:
    std::size_t limit_;
    std::size_t used_ = 0;
};

/// Fills `spec` up to `degree` with roots for which `accept` says Outside.
template <class Accept>
void fill_roots(Rng& rng, RootSpec& spec, std::size_t degree, const IntervalLR& iv, const GeneratorOptions& opt,
                Budget& budget, Accept accept, const char* what) {
    std::size_t have = spec.degree();
    while (have < degree) {
        const std::size_t room = degree - have;
        if (room >= 2 && uniform_int(rng, 0, 1) == 0) {
            ComplexRational z(sample_relative(rng, iv, -2, 3, opt.max_denominator),
                              sample_rational(rng, 0, 3, opt.max_denominator) * iv.width());
            if (sgn(z.im) == 0 || !accept(z)) {
                budget.reject(what);
                continue;
            }
            const unsigned m = sample_multiplicity(rng, room, 2);
            spec.complex_pairs.push_back({z.re, z.im, m});
            have += 2 * m;
        } else {
            Rational x = sample_relative(rng, iv, -3, 4, opt.max_denominator);
            if (!accept(ComplexRational(x))) {
                budget.reject(what);
                continue;
            }
            const unsigned m = sample_multiplicity(rng, room, 1);
            spec.real_roots.push_back({x, m});
            have += m;
        }
    }
}

}  // namespace detail

/// Roots strictly outside C0, degree in [1, degree_bound].
inline Generated<RootSpec> generate_case1(std::uint64_t seed, std::size_t degree_bound, const IntervalLR& iv,
                                          const GeneratorOptions& opt = {}) {
    if (degree_bound < 1) throw std::invalid_argument("generate_case1: degree bound must be >= 1");
    Rng rng(seed);
    detail::Budget budget(opt.budget);
    RootSpec spec;
    spec.leading = detail::sample_leading(rng);
    const auto degree = static_cast<std::size_t>(detail::uniform_int(rng, 1, static_cast<long>(degree_bound)));
    detail::fill_roots(
        rng, spec, degree, iv, opt, budget,
        [&](const ComplexRational& z) { return in_C0(z, iv) == Membership::Outside; }, "case 1");
    return {std::move(spec), budget.used()};
}

/// Roots strictly outside C1 u C2 plus a simple root a in (l, r); total degree in [1, degree_bound].
inline Generated<Case2Instance> generate_case2(std::uint64_t seed, std::size_t degree_bound, const IntervalLR& iv,
                                               const GeneratorOptions& opt = {}) {
    if (degree_bound < 1) throw std::invalid_argument("generate_case2: degree bound must be >= 1");
    Rng rng(seed);
    detail::Budget budget(opt.budget);
    Case2Instance inst;
    inst.spec.leading = detail::sample_leading(rng);
    const auto degree = static_cast<std::size_t>(detail::uniform_int(rng, 0, static_cast<long>(degree_bound) - 1));
    detail::fill_roots(
        rng, inst.spec, degree, iv, opt, budget,
        [&](const ComplexRational& z) {
            return in_C12(z, iv) == Membership::Outside && !(sgn(z.im) == 0 && z.re == iv.r());
        },
        "case 2");
    while (true) {
        inst.a = detail::sample_relative(rng, iv, 0, 1, opt.max_denominator);
        if (iv.contains(inst.a)) break;
        budget.reject("case 2 simple root");
    }
    return {std::move(inst), budget.used()};
}

/// Instance of degree n in [max(p_count, 1), degree_bound] with at least
/// p_count roots in L_{n - p_count}, at most q_count roots in A_{q_count}
/// and no root on a boundary or undecided at the given precision.
inline Generated<ObreshkoffInstance> generate_obreshkoff(std::uint64_t seed, std::size_t degree_bound,
                                                         const IntervalLR& iv, std::size_t p_count,
                                                         std::size_t q_count, const GeneratorOptions& opt = {},
                                                         unsigned precision_bits = kDefaultPrecisionBits,
                                                         std::optional<std::size_t> fixed_degree = std::nullopt) {
    if (p_count > q_count) throw std::invalid_argument("generate_obreshkoff: need p_count <= q_count");
    const std::size_t min_degree = std::max<std::size_t>(p_count, 1);
    if (degree_bound < min_degree) throw std::invalid_argument("generate_obreshkoff: degree bound too small");
    Rng rng(seed);
    detail::Budget budget(opt.budget);
    const std::size_t n =
        fixed_degree.value_or(static_cast<std::size_t>(detail::uniform_int(rng, static_cast<long>(min_degree),
                                                                           static_cast<long>(degree_bound))));
    if (n < min_degree) throw std::invalid_argument("generate_obreshkoff: degree below p_count");
    const ObreshkoffIndex lens_index{static_cast<unsigned>(n - p_count)};
    const ObreshkoffIndex area_index{static_cast<unsigned>(q_count)};
    while (true) {
        ObreshkoffInstance inst{RootSpec{}, p_count, q_count};
        inst.spec.leading = detail::sample_leading(rng);
        // Seed the lens: real roots in (l, r) lie in every lens, pairs are sampled near the segment.
        std::size_t placed = 0;
        bool bad = false;
        while (placed < p_count && !bad) {
            if (p_count - placed >= 2 && detail::uniform_int(rng, 0, 2) == 0) {
                ComplexRational z(detail::sample_relative(rng, iv, 0, 1, opt.max_denominator),
                                  detail::sample_rational(rng, 0, Rational(1, 4), opt.max_denominator) * iv.width());
                if (sgn(z.im) == 0 ||
                    obreshkoff_membership(z, iv, lens_index, DiscPart::Lens, precision_bits) != Membership::Inside) {
                    bad = true;
                    break;
                }
                inst.spec.complex_pairs.push_back({z.re, z.im, 1});
                placed += 2;
            } else {
                Rational x = detail::sample_relative(rng, iv, 0, 1, opt.max_denominator);
                if (!iv.contains(x)) {
                    bad = true;
                    break;
                }
                inst.spec.real_roots.push_back({x, 1});
                placed += 1;
            }
        }
        if (!bad) {
            detail::fill_roots(
                rng, inst.spec, n, iv, opt, budget,
                [&](const ComplexRational& z) {
                    // Reject only hopeless samples here; the full hypothesis check follows.
                    const Membership m = obreshkoff_membership(z, iv, area_index, DiscPart::Area, precision_bits);
                    return m == Membership::Outside || m == Membership::Inside;
                },
                "obreshkoff root");
            if (inst.spec.degree() == n) {
                if (obreshkoff_hypotheses(inst.spec, iv, p_count, q_count, precision_bits) == CheckStatus::Passed)
                    return {std::move(inst), budget.used()};
            }
        }
        budget.reject("obreshkoff instance");
    }
}

/// Monic-up-to-a-positive-factor product of (X - a), a <= 0, and conjugate
/// quadratics with roots inside B. Such a polynomial is normal.
inline RootSpec random_normal_spec(Rng& rng, std::size_t max_degree, unsigned max_den = 64) {
    RootSpec spec;
    Rational lead(detail::uniform_int(rng, 1, 9), detail::uniform_int(rng, 1, 9));
    lead.canonicalize();
    spec.leading = lead;
    const auto degree = static_cast<std::size_t>(detail::uniform_int(rng, 0, static_cast<long>(max_degree)));
    std::size_t have = 0;
    while (have < degree) {
        if (degree - have >= 2 && detail::uniform_int(rng, 0, 1) == 0) {
            Rational re = -detail::sample_rational(rng, Rational(1, 64), 4, max_den);
            if (sgn(re) >= 0) continue;
            Rational slope = detail::sample_rational(rng, Rational(1, 64), Rational(7, 4), max_den);
            Rational im = slope * -re;
            if (sgn(im) <= 0 || im * im > 3 * re * re) continue;
            spec.complex_pairs.push_back({re, im, 1});
            have += 2;
        } else {
            // Zero roots are allowed and exercise the X^m p(X) closure.
            Rational a = detail::uniform_int(rng, 0, 5) == 0 ? Rational(0) : -detail::sample_rational(rng, 0, 4, max_den);
            spec.real_roots.push_back({a, 1});
            have += 1;
        }
    }
    return spec;
}

}  // namespace threecircles
