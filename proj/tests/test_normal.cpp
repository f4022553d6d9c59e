#include "threecircles/certcheck.hpp"
#include "threecircles/normal.hpp"
#include "threecircles/regions.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace threecircles;
using threecircles::testing::Rng;

namespace {

/// Every sequence of length 1..max_len over `values`, via odometer counting.
template <class F>
void for_each_sequence(const std::vector<Rational>& values, std::size_t max_len, F&& f) {
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::size_t> idx(len, 0);
        while (true) {
            std::vector<Rational> s(len);
            for (std::size_t i = 0; i < len; ++i) s[i] = values[idx[i]];
            f(s);
            std::size_t pos = 0;
            while (pos < len && ++idx[pos] == values.size()) idx[pos++] = 0;
            if (pos == len) break;
        }
    }
}

TEST(NormalSeq, Examples) {
    EXPECT_TRUE(normal_seq(std::vector<Rational>{1}));
    EXPECT_TRUE(normal_seq(std::vector<Rational>{1, 3, 1}));
    EXPECT_FALSE(normal_seq(std::vector<Rational>{1, 1, 2}));
    EXPECT_FALSE(normal_seq(std::vector<Rational>{}));
    EXPECT_TRUE(normal_seq(std::vector<Rational>{0, 1}));
    EXPECT_FALSE(normal_seq(std::vector<Rational>{-1, 1}));
    // Tie a_{i-1} a_{i+1} = a_i^2 is allowed.
    EXPECT_TRUE(normal_seq(std::vector<Rational>{1, 1, 1}));
}

TEST(IsNormal, Examples) {
    EXPECT_TRUE(is_normal(Polynomial{1, 1}));
    EXPECT_FALSE(is_normal(Polynomial{-1, 1}));
    EXPECT_FALSE(is_normal(Polynomial{}));
    EXPECT_TRUE(is_normal(Polynomial{0, 0, 1}));
}

TEST(NormalViaProperties, Examples) {
    EXPECT_TRUE(normal_via_properties(Polynomial{0, 0, 1}).is_normal);
    const auto gap = normal_via_properties(Polynomial{1, 0, 1});
    EXPECT_FALSE(gap.is_normal);
    EXPECT_EQ(gap.failed_condition, 4);
    EXPECT_EQ(gap.failing_index, 1u);
    EXPECT_TRUE(normal_via_properties(Polynomial{1, 3, 1}).is_normal);
    EXPECT_FALSE(normal_via_properties(Polynomial{1, 3, 1}).failing_index.has_value());

    const auto negative = normal_via_properties(Polynomial{1, -1, 1});
    EXPECT_EQ(negative.failed_condition, 1);
    EXPECT_EQ(negative.failing_index, 1u);
    const auto lead = normal_via_properties(Polynomial{1, 2, -1});
    EXPECT_EQ(lead.failed_condition, 1);
    const auto concave = normal_via_properties(Polynomial{1, 1, 2});
    EXPECT_EQ(concave.failed_condition, 3);
    EXPECT_EQ(concave.failing_index, 1u);
}

TEST(NormalDefinitions, AgreeExhaustively) {
    const std::vector<Rational> values{0, Rational(1, 2), 1, 2};
    std::size_t checked = 0;
    for_each_sequence(values, 5, [&](const std::vector<Rational>& s) {
        const Polynomial p(s);
        if (p.is_zero()) return;
        ++checked;
        const auto verdict = normal_via_properties(p);
        EXPECT_EQ(is_normal(p), verdict.is_normal) << to_string(p);
        EXPECT_EQ(verdict.failing_index.has_value(), !verdict.is_normal);
    });
    EXPECT_GT(checked, 1000u);
}

TEST(NormalDefinitions, AgreeOnRandomSignedSequences) {
    Rng rng(31);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t len = 1 + trial % 8;
        std::vector<Rational> s(len);
        for (auto& x : s) {
            const auto pick = std::uniform_int_distribution<int>(0, 5)(rng);
            x = pick == 0 ? Rational(0) : threecircles::testing::random_rational(rng, 3, 3);
            if (pick >= 3) x = abs(x);
        }
        const Polynomial p(s);
        if (p.is_zero()) continue;
        EXPECT_EQ(is_normal(p), normal_via_properties(p).is_normal) << to_string(p);
    }
}

TEST(QuadFromConjugatePair, Examples) {
    EXPECT_EQ(quad_from_conjugate_pair({0, 1}), (Polynomial{1, 0, 1}));
    EXPECT_EQ(quad_from_conjugate_pair({-1, 1}), (Polynomial{2, 2, 1}));
    EXPECT_EQ(quad_from_conjugate_pair({-1, 2}), (Polynomial{5, 2, 1}));
}

TEST(LinearFactor, NormalIffRootNonPositive) {
    for (int num = -40; num <= 40; ++num)
        for (int den : {1, 2, 3, 7}) {
            Rational a(num, den);
            a.canonicalize();
            EXPECT_EQ(is_normal(Polynomial::linear_root(a)), sgn(a) <= 0) << a;
        }
}

TEST(ConjugateQuadratic, NormalIffInB) {
    for (int re_num = -12; re_num <= 12; ++re_num)
        for (int im_num = -24; im_num <= 24; ++im_num)
            for (int den : {1, 2, 5}) {
                Rational re(re_num, den), im(im_num, den);
                re.canonicalize();
                im.canonicalize();
                const ComplexRational z(re, im);
                EXPECT_EQ(is_normal(quad_from_conjugate_pair(z)), inB(z)) << to_string(z);
            }
}

TEST(ConjugateQuadratic, TightBoundaryWitnesses) {
    // Im^2 = 3 Re^2 has no rational solution besides the origin; the origin
    // is tight on both inequalities and X^2 is normal.
    EXPECT_TRUE(is_normal(quad_from_conjugate_pair({0, 0})));
    EXPECT_EQ(in_B({0, 0}), Membership::Boundary);
    // Just inside / outside the boundary line with slope sqrt(3) ~ 1.7320508.
    EXPECT_TRUE(is_normal(quad_from_conjugate_pair({-1, Rational(17320508, 10000000)})));
    EXPECT_FALSE(is_normal(quad_from_conjugate_pair({-1, Rational(17320509, 10000000)})));
    // Re = 0 on the boundary with Im != 0 lies outside B.
    EXPECT_FALSE(is_normal(quad_from_conjugate_pair({0, 1})));
}

TEST(NormalProduct, ClosedUnderMultiplication) {
    Rng rng(32);
    for (int trial = 0; trial < 500; ++trial) {
        const Polynomial p = poly_from_roots(random_normal_spec(rng, 6));
        const Polynomial q = poly_from_roots(random_normal_spec(rng, 6));
        ASSERT_TRUE(is_normal(p)) << to_string(p);
        ASSERT_TRUE(is_normal(q)) << to_string(q);
        EXPECT_TRUE(is_normal(p * q)) << to_string(p) << " * " << to_string(q);
    }
}

TEST(NormalProduct, MonomialShiftClosure) {
    Rng rng(33);
    for (int trial = 0; trial < 300; ++trial) {
        const Polynomial p = trial % 2 ? poly_from_roots(random_normal_spec(rng, 5))
                                       : threecircles::testing::random_poly(rng, 5, 3, 3);
        if (p.is_zero()) continue;
        for (std::size_t m = 0; m <= 3; ++m)
            EXPECT_EQ(is_normal(Polynomial::monomial(1, m) * p), is_normal(p)) << to_string(p) << " m=" << m;
    }
}

TEST(NormalProduct, NonzeroConstantTermMeansAllPositive) {
    Rng rng(34);
    for (int trial = 0; trial < 300; ++trial) {
        const Polynomial p = poly_from_roots(random_normal_spec(rng, 6));
        ASSERT_TRUE(is_normal(p));
        EXPECT_EQ(sgn(p[0]) != 0, all_pos(p.coeffs())) << to_string(p);
    }
}

TEST(NormalProduct, RootsInBGiveNormal) {
    RootSpec spec;
    spec.real_roots = {{0, 1}, {-3, 2}};
    spec.complex_pairs = {{-1, 1, 1}, {Rational(-1, 2), Rational(3, 4), 2}};
    EXPECT_TRUE(is_normal(poly_from_roots(spec)));
}

TEST(NormalChanges, Examples) {
    EXPECT_EQ(normal_changes_value(Polynomial{1, 1}, 1), 1u);
    EXPECT_EQ(normal_changes_value(Polynomial{1}, 2), 1u);
    EXPECT_EQ(normal_changes_value(Polynomial{1, 3, 1}, 1), 1u);
    EXPECT_EQ((Polynomial{1, 3, 1} * Polynomial{-1, 1}), (Polynomial{-1, -2, 2, 1}));
}

TEST(NormalChanges, PreconditionsEnforced) {
    EXPECT_THROW(normal_changes_value(Polynomial{1, 1}, 0), std::invalid_argument);
    EXPECT_THROW(normal_changes_value(Polynomial{1, 1}, -1), std::invalid_argument);
    EXPECT_THROW(normal_changes_value(Polynomial{1, 0, 1}, 1), std::invalid_argument);
    EXPECT_THROW(normal_changes_value(Polynomial{0, 1}, 1), std::invalid_argument);
}

TEST(NormalChanges, ExactlyOneVariation) {
    Rng rng(35);
    int tested = 0;
    while (tested < 500) {
        const Polynomial p = poly_from_roots(random_normal_spec(rng, 7));
        if (sgn(p[0]) == 0) continue;
        const Rational a = abs(threecircles::testing::random_nonzero(rng));
        ++tested;
        EXPECT_EQ(normal_changes_value(p, a), 1u) << to_string(p) << " a=" << a;
    }
}

}  // namespace
