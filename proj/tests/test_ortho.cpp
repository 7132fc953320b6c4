#include "gen.hpp"

#include <bernhankel/ortho.hpp>

#include <gtest/gtest.h>

using namespace bernhankel;

namespace {

MomentFunctional at(const MomentSequence& seq, long x) { return MomentFunctional(seq.at(Rational(x))); }

}  // namespace

TEST(Functional, Examples) {
    const MomentFunctional L(MomentSequence::power_sums(2));
    EXPECT_EQ(L(Polynomial(1)), L.moment(0));
    EXPECT_EQ(L(Polynomial::monomial(Rational(1), 2)).str(), "17");
    EXPECT_EQ(L(Polynomial{Rational(-2), Rational(3)}), Rational(3) * L.moment(1) - Rational(2) * L.moment(0));
    EXPECT_THROW(MomentFunctional(MomentSequence::b2k1()), std::invalid_argument);
}

TEST(Functional, LinearRandomized) {
    const auto L = at(MomentSequence::b2k3(), 7);
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial p = gen::polynomial(6), q = gen::polynomial(6);
        const Rational a = gen::rational(), b = gen::rational();
        EXPECT_EQ(L(p * a + q * b), a * L(p) + b * L(q));
    }
}

TEST(OrthoPoly, LowDegrees) {
    const auto L = at(MomentSequence::b2k1(), 5);
    EXPECT_EQ(monic_orthogonal_poly(L, 0), Polynomial(1));
    EXPECT_EQ(monic_orthogonal_poly(L, 1), (Polynomial{-L.moment(1) / L.moment(0), Rational(1)}));
    const Polynomial p2 = monic_orthogonal_poly(L, 2);
    EXPECT_EQ(p2.degree(), 2);
    EXPECT_EQ(p2.leading(), Rational(1));
    EXPECT_TRUE(L(p2).is_zero());
    EXPECT_TRUE(L(Polynomial::x() * p2).is_zero());
}

TEST(OrthoPoly, DegenerateThrows) {
    // H_2 of b vanishes at x = 3, so P_3 is undefined.
    EXPECT_THROW(monic_orthogonal_poly(at(MomentSequence::b2k1(), 3), 3), NondegeneracyError);
}

TEST(OrthoPoly, ZetaExample) {
    const auto L = at(MomentSequence::b2k1(), 5);
    EXPECT_EQ((L.hankel(1) / L.hankel(0)).str(), "7");
    const Polynomial p1 = monic_orthogonal_poly(L, 1);
    EXPECT_EQ(L(p1 * p1).str(), "7");
}

TEST(OrthoPoly, OrthogonalityAllFamilies) {
    for (const auto& seq : {MomentSequence::b2k1(), MomentSequence::b2k3(), MomentSequence::b2k5()})
        for (long xv : {5L, 7L, 9L}) {
            const auto L = at(seq, xv);
            for (long n = 0; n <= 6; ++n) {
                if (n >= 1 && L.hankel(n - 1).is_zero()) break;
                for (long m = 0; m <= n; ++m)
                    for (const auto& c : orthogonality_check(L, m, n))
                        EXPECT_EQ(c.status, Status::pass) << seq.name() << " x=" << xv << " m=" << m << " n=" << n;
            }
        }
}

TEST(OrthoPoly, RecurrenceMatchesJFraction) {
    const auto L = at(MomentSequence::b2k3(), 13);
    const auto jf = jfraction_from_moments<Rational>(L.sequence(), 5);
    for (long n = 1; n <= 5; ++n) {
        const auto step = recurrence_step(monic_orthogonal_poly(L, n - 1), monic_orthogonal_poly(L, n),
                                          monic_orthogonal_poly(L, n + 1));
        EXPECT_TRUE(step.consistent);
        EXPECT_EQ(step.s, jf.s[static_cast<std::size_t>(n)]) << n;
        EXPECT_EQ(step.t, jf.t[static_cast<std::size_t>(n)]) << n;
    }
}

TEST(OrthoPoly, ErrorsBecomeFailedCases) {
    const auto cases = orthogonality_check(at(MomentSequence::b2k1(), 3), 3, 3);
    ASSERT_EQ(cases.size(), 1u);
    EXPECT_EQ(cases[0].status, Status::fail);
}
