#include "threecircles/regions.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace threecircles;
using threecircles::testing::Rng;
using M = Membership;

namespace {

const IntervalLR kUnit(-1, 1);

std::vector<ComplexRational> grid(long range, long den) {
    std::vector<ComplexRational> out;
    for (long a = -range * den; a <= range * den; ++a)
        for (long b = -range * den; b <= range * den; ++b) {
            Rational x(a, den), y(b, den);
            x.canonicalize();
            y.canonicalize();
            out.push_back({x, y});
        }
    return out;
}

TEST(SurdSign, Examples) {
    EXPECT_EQ(surd_sign(1, -2), -1);
    EXPECT_EQ(surd_sign(1, -1), 1);
    EXPECT_EQ(surd_sign(0, 0), 0);
    EXPECT_EQ(surd_sign(-1, 2), 1);
    EXPECT_EQ(surd_sign(-1, 1), -1);
    EXPECT_EQ(surd_sign(0, -5), -1);
    EXPECT_EQ(surd_sign(3, 0), 1);
}

TEST(SurdSign, AgreesWithFloatingPointAwayFromZero) {
    Rng rng(41);
    for (int trial = 0; trial < 2000; ++trial) {
        const Rational a = threecircles::testing::random_rational(rng, 20, 9);
        const Rational b = threecircles::testing::random_rational(rng, 20, 9);
        const double v = a.get_d() * std::sqrt(3.0) + b.get_d();
        if (std::abs(v) < 1e-9) continue;
        EXPECT_EQ(surd_sign(a, b), v < 0 ? -1 : 1) << a << " " << b;
    }
}

TEST(InC0, Examples) {
    const IntervalLR iv(Rational(-3, 2), 7);
    EXPECT_EQ(in_C0({iv.midpoint(), 0}, iv), M::Inside);
    EXPECT_EQ(in_C0({iv.l(), 0}, iv), M::Boundary);
    EXPECT_EQ(in_C0({0, 1}, kUnit), M::Boundary);
    EXPECT_EQ(in_C0({2, 0}, kUnit), M::Outside);
    EXPECT_TRUE(notin_C0({0, 1}, kUnit));
    EXPECT_FALSE(notin_C0({0, 0}, kUnit));
}

TEST(InC12, Examples) {
    const IntervalLR iv(Rational(-3, 2), 7);
    EXPECT_EQ(in_C12({iv.midpoint(), 0}, iv), M::Inside);
    EXPECT_EQ(in_C12({iv.r(), 0}, iv), M::Boundary);
    EXPECT_EQ(in_C12({0, 1}, kUnit), M::Inside);
    EXPECT_EQ(in_C12({0, 3}, kUnit), M::Outside);
    EXPECT_EQ(in_C12({0, Rational(9, 8)}, kUnit), M::Inside);
}

TEST(InB, Examples) {
    EXPECT_EQ(in_B({-1, 0}), M::Inside);
    EXPECT_EQ(in_B({-1, 2}), M::Outside);
    EXPECT_EQ(in_B({0, 0}), M::Boundary);
    EXPECT_EQ(in_B({Rational(1, 100), 0}), M::Outside);
    EXPECT_EQ(in_B({0, 1}), M::Outside);
    EXPECT_TRUE(inB({0, 0}));
    EXPECT_FALSE(inB({-1, 2}));
}

TEST(MobiusPoint, Examples) {
    const IntervalLR iv(Rational(1, 3), 5);
    EXPECT_EQ(mobius_point({0, 0}, iv), ComplexRational(iv.r()));
    EXPECT_EQ(mobius_point({0, 1}, kUnit), ComplexRational(0, -1));
    EXPECT_THROW(mobius_point({-1, 0}, kUnit), std::domain_error);
}

TEST(InversePoint, Examples) {
    const IntervalLR iv(Rational(1, 3), 5);
    EXPECT_EQ(inverse_point(ComplexRational(iv.r()), iv), ComplexRational(0));
    EXPECT_EQ(inverse_point({0, -1}, kUnit), ComplexRational(0, 1));
    EXPECT_EQ(inverse_point(ComplexRational(iv.midpoint()), iv), ComplexRational(1));
    EXPECT_THROW(inverse_point(ComplexRational(iv.l()), iv), std::domain_error);
}

TEST(MobiusPoint, InverseRoundTrip) {
    Rng rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto iv = threecircles::testing::random_interval(rng);
        const auto w = threecircles::testing::random_point(rng);
        if (w == ComplexRational(iv.l())) continue;
        const auto z = inverse_point(w, iv);
        EXPECT_EQ(mobius_point(z, iv), w);
        if (z == ComplexRational(-1)) continue;
        EXPECT_EQ(inverse_point(mobius_point(z, iv), iv), z);
    }
}

TEST(Obreshkoff, KZeroCollapsesToC0) {
    const IntervalLR iv(Rational(-1, 2), 3);
    for (const auto& z : grid(4, 2)) {
        EXPECT_EQ(obreshkoff_membership(z, iv, {0}, DiscPart::Area), in_C0(z, iv)) << to_string(z);
        EXPECT_EQ(obreshkoff_membership(z, iv, {0}, DiscPart::Lens), in_C0(z, iv)) << to_string(z);
    }
}

TEST(Obreshkoff, KOneAreaIsC12) {
    for (const auto& z : grid(3, 4)) EXPECT_EQ(obreshkoff_membership(z, kUnit, {1}, DiscPart::Area), in_C12(z, kUnit)) << to_string(z);
}

TEST(Obreshkoff, KTwoExample) {
    const IntervalLR iv(0, 2);
    EXPECT_EQ(obreshkoff_membership({1, 1}, iv, {2}, DiscPart::Upper), M::Inside);
    // Centre (1, 1), radius^2 2: (1, 1 + sqrt 2) is on the circle, (1, 5/2) just outside.
    EXPECT_EQ(obreshkoff_membership({1, Rational(5, 2)}, iv, {2}, DiscPart::Upper), M::Outside);
    EXPECT_EQ(obreshkoff_membership({1, Rational(12, 5)}, iv, {2}, DiscPart::Upper), M::Inside);
}

TEST(Obreshkoff, UpperDiscGeometryForKOne) {
    // Centre (0, sqrt(3)/3), radius^2 4/3 on (-1, 1): (0, sqrt 3) is the top point.
    EXPECT_EQ(obreshkoff_membership({0, Rational(173, 100)}, kUnit, {1}, DiscPart::Upper), M::Inside);
    EXPECT_EQ(obreshkoff_membership({0, Rational(174, 100)}, kUnit, {1}, DiscPart::Upper), M::Outside);
    EXPECT_EQ(obreshkoff_membership({0, Rational(-174, 100)}, kUnit, {1}, DiscPart::Lower), M::Outside);
}

TEST(Obreshkoff, AdaptivePathAgreesWithExactCotangents) {
    Rng rng(43);
    for (int trial = 0; trial < 600; ++trial) {
        const auto iv = threecircles::testing::random_interval(rng);
        const auto z = threecircles::testing::random_point(rng, 6);
        for (unsigned k : {0u, 1u, 2u, 4u})
            for (bool upper : {true, false}) {
                const auto exact = obreshkoff_disc(z, iv, {k}, upper);
                const auto adaptive = obreshkoff_disc_adaptive(z, iv, {k}, upper);
                if (exact == M::Boundary)
                    EXPECT_TRUE(adaptive == M::Undecided || adaptive == M::Boundary);
                else
                    EXPECT_EQ(adaptive, exact) << to_string(z) << " k=" << k;
            }
    }
}

TEST(Obreshkoff, AdaptiveAgreesWithDoubleAwayFromBoundary) {
    Rng rng(44);
    for (int trial = 0; trial < 600; ++trial) {
        const auto iv = threecircles::testing::random_interval(rng);
        const auto z = threecircles::testing::random_point(rng, 6);
        for (unsigned k : {3u, 5u, 6u, 9u}) {
            const double e0 = c0_expression(z, iv).get_d();
            const double c = 1.0 / std::tan(std::numbers::pi / (k + 2));
            const double v = e0 - iv.width().get_d() * z.im.get_d() * c;
            if (std::abs(v) < 1e-6) continue;
            EXPECT_EQ(obreshkoff_membership(z, iv, {k}, DiscPart::Upper), v < 0 ? M::Inside : M::Outside);
        }
    }
}

TEST(Obreshkoff, TinyBudgetCanLeaveUndecided) {
    // A point within 2^-250 of the k = 3 upper circle cannot be resolved with 64 bits.
    const IntervalLR iv(-1, 1);
    // Top of the circle is cot(pi/5) + csc(pi/5) = cot(pi/10).
    const auto [lo, hi] = cot_pi_over_enclosure(10, 256);
    const Rational y = (lo + hi) / 2;
    EXPECT_EQ(obreshkoff_membership({0, y}, iv, {3}, DiscPart::Upper, 64), M::Undecided);
    EXPECT_NE(obreshkoff_membership({0, y}, iv, {3}, DiscPart::Upper, 1024), M::Undecided);
}

TEST(Obreshkoff, CotangentEnclosureBrackets) {
    for (unsigned m = 2; m <= 20; ++m)
        for (mpfr_prec_t prec : {32, 64, 256}) {
            const auto [lo, hi] = cot_pi_over_enclosure(m, prec);
            EXPECT_LE(lo, hi);
            const double c = 1.0 / std::tan(std::numbers::pi / m);
            EXPECT_LE(lo.get_d(), c + 1e-12);
            EXPECT_GE(hi.get_d(), c - 1e-12);
            if (prec == 256) {
                EXPECT_LT(Rational(hi - lo), Rational(1, 1u << 30));
            }
        }
    EXPECT_THROW(cot_pi_over_enclosure(1, 64), std::invalid_argument);
}

TEST(RegionProperties, C0InsideC12) {
    Rng rng(45);
    for (const auto& z : grid(2, 5)) {
        if (in_C0(z, kUnit) == M::Inside) {
            EXPECT_EQ(in_C12(z, kUnit), M::Inside) << to_string(z);
        }
    }
    for (int trial = 0; trial < 2000; ++trial) {
        const auto iv = threecircles::testing::random_interval(rng);
        const auto z = threecircles::testing::random_point(rng, 6);
        if (in_C0(z, iv) == M::Inside) {
            EXPECT_EQ(in_C12(z, iv), M::Inside);
        }
    }
}

TEST(RegionProperties, ConjugateSymmetry) {
    Rng rng(46);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto iv = threecircles::testing::random_interval(rng);
        const auto z = threecircles::testing::random_point(rng, 6);
        EXPECT_EQ(in_C0(z, iv), in_C0(z.conj(), iv));
        EXPECT_EQ(in_C12(z, iv), in_C12(z.conj(), iv));
        EXPECT_EQ(in_B(z), in_B(z.conj()));
        for (unsigned k : {1u, 3u, 4u})
            for (auto which : {DiscPart::Area, DiscPart::Lens})
                EXPECT_EQ(obreshkoff_membership(z, iv, {k}, which), obreshkoff_membership(z.conj(), iv, {k}, which));
    }
}

TEST(RegionProperties, LensesShrinkAndAreasGrowWithK) {
    Rng rng(47);
    for (int trial = 0; trial < 500; ++trial) {
        const auto iv = threecircles::testing::random_interval(rng);
        const auto z = threecircles::testing::random_point(rng, 6);
        for (unsigned k = 0; k < 6; ++k) {
            const auto lens_k = obreshkoff_membership(z, iv, {k}, DiscPart::Lens);
            const auto lens_k1 = obreshkoff_membership(z, iv, {k + 1}, DiscPart::Lens);
            const auto area_k = obreshkoff_membership(z, iv, {k}, DiscPart::Area);
            const auto area_k1 = obreshkoff_membership(z, iv, {k + 1}, DiscPart::Area);
            if (lens_k1 == M::Inside) {
                EXPECT_NE(lens_k, M::Outside) << to_string(z) << " k=" << k;
            }
            if (area_k == M::Inside) {
                EXPECT_NE(area_k1, M::Outside) << to_string(z) << " k=" << k;
            }
        }
    }
}

TEST(Correspondence, RightHalfPlaneMapsIntoC0) {
    Rng rng(48);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto iv = threecircles::testing::random_interval(rng);
        const auto z = threecircles::testing::random_point(rng);
        if (z == ComplexRational(-1)) continue;
        EXPECT_EQ(notin_C0(mobius_point(z, iv), iv), sgn(z.re) <= 0) << to_string(z);
    }
}

TEST(Correspondence, SectorBMapsOutsideC12) {
    Rng rng(49);
    int decided = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto iv = threecircles::testing::random_interval(rng);
        const auto z = threecircles::testing::random_point(rng);
        if (z == ComplexRational(-1)) continue;
        const auto b = in_B(z);
        const auto c = in_C12(mobius_point(z, iv), iv);
        if (b == M::Boundary || c == M::Boundary) continue;
        ++decided;
        EXPECT_EQ(b == M::Inside, c == M::Outside) << to_string(z);
    }
    EXPECT_GT(decided, 900);
}

}  // namespace
