#include "gen.hpp"

#include <bernhankel/contfrac.hpp>
#include <bernhankel/suites.hpp>

#include <gtest/gtest.h>

using namespace bernhankel;

namespace {

using RF = RationalFunction;

Polynomial x2_minus(long c) { return Polynomial{Rational(-c * c), Rational(0), Rational(1)}; }

/// Bottom-up evaluation of c0/(1 + s_0 w - t_1 w^2/(1 + s_1 w - ...)) as a truncated series.
template <typename F>
std::vector<F> nested_series(const JFraction<F>& jf, std::size_t keep) {
    auto inverse = [keep](const std::vector<F>& p) {
        std::vector<F> out(keep, F(0));
        for (std::size_t k = 0; k < keep; ++k) {
            F acc = k == 0 ? F(1) : F(0);
            for (std::size_t j = 1; j <= k && j < p.size(); ++j) acc = acc - p[j] * out[k - j];
            out[k] = acc / p[0];
        }
        return out;
    };
    std::vector<F> tail(keep, F(0));  // value of the level below the deepest one
    for (long m = jf.depth(); m >= 0; --m) {
        std::vector<F> den(keep, F(0));
        den[0] = F(1);
        if (keep > 1) den[1] = jf.s[static_cast<std::size_t>(m)];
        if (m < jf.depth())
            for (std::size_t k = 2; k < keep; ++k) den[k] = den[k] - jf.t[static_cast<std::size_t>(m + 1)] * tail[k - 2];
        tail = inverse(den);
    }
    for (auto& c : tail) c = c * jf.c0;
    return tail;
}

}  // namespace

TEST(Alpha, Values) {
    EXPECT_TRUE(alpha(0).is_zero());
    EXPECT_EQ(alpha(1), x2_minus(1) / Rational(12));
    EXPECT_EQ(alpha(2), x2_minus(2) / Rational(15));
    EXPECT_TRUE(alpha(3)(Rational(3)).is_zero());
    for (long r = 1; r <= 10; ++r) EXPECT_TRUE(alpha(2 * r + 1)(Rational(2 * r + 1)).is_zero());
}

TEST(Contraction, EvenExamples) {
    const auto c = contract_even(alpha_table<RF>(8), 3);
    EXPECT_EQ(c.sigma[0], RF(x2_minus(1) / Rational(12)));
    EXPECT_EQ(c.tau[1], RF(x2_minus(1) * x2_minus(2) / Rational(180)));
    const auto at3 = contract_even(alpha_table<Rational>(8, Rational(3)), 3);
    EXPECT_EQ(at3.sigma[1].str(), "1/3");
}

TEST(Contraction, OddExamples) {
    const auto c = contract_odd(alpha_table<RF>(12), 5);
    EXPECT_EQ(c.sigma[0], RF((Polynomial{Rational(-7), Rational(0), Rational(3)}) / Rational(20)));
    for (long m = 1; m < 5; ++m) {
        EXPECT_EQ(c.tau[m].as_polynomial()->degree(), 4);
        EXPECT_EQ(c.sigma[m].as_polynomial()->degree(), 2);
    }
    const auto at3 = contract_odd(alpha_table<Rational>(6, Rational(3)), 2);
    EXPECT_TRUE(at3.tau[1].is_zero());
}

TEST(Contraction, ShortTableThrows) {
    EXPECT_THROW(contract_even(alpha_table<RF>(3), 3), std::out_of_range);
}

TEST(Beta, Examples) {
    const auto beta = beta_sequence<RF>(6);
    EXPECT_EQ(beta[1], RF((Polynomial{Rational(-7), Rational(0), Rational(3)}) / Rational(20)));
    const auto at3 = beta_sequence<Rational>(3, Rational(3));
    EXPECT_TRUE(at3[2].is_zero());
    EXPECT_EQ(at3[3].str(), "-4/9");
}

TEST(Beta, ConsistencyWithAlpha) {
    const auto a = alpha_table<RF>(20);
    const auto beta = beta_sequence<RF>(17);
    for (std::size_t m = 1; m <= 8; ++m) {
        EXPECT_EQ(beta[2 * m - 1] * beta[2 * m], a[2 * m] * a[2 * m + 1]);
        EXPECT_EQ(beta[2 * m] + beta[2 * m + 1], a[2 * m + 1] + a[2 * m + 2]);
    }
}

TEST(Beta, VanishingEvenTermIsHarmless) {
    // beta_2 = 0 at x = 3, but only odd-index terms are ever divisors.
    const auto at3 = beta_sequence<Rational>(9, Rational(3));
    const auto symbolic = beta_sequence<RF>(9);
    for (std::size_t m = 1; m <= 9; ++m) EXPECT_EQ(at3[m], symbolic[m].evaluate(Rational(3))) << m;
}

TEST(Tridiag, Examples) {
    const auto c0 = contract_even(alpha_table<RF>(6), 3);
    const auto d0 = tridiag_det_seq(c0.sigma, c0.tau, 1);
    EXPECT_EQ(d0.D(-1), RF(1));
    EXPECT_EQ(d0.D(0), RF(x2_minus(1) / Rational(12)));
    EXPECT_EQ(d0.D(1), RF(x2_minus(1) * x2_minus(3) * Rational(9, 1680)));
    const auto c1 = contract_odd(alpha_table<RF>(6), 2);
    EXPECT_EQ(tridiag_det_seq(c1.sigma, c1.tau, 0).D(0), RF((Polynomial{Rational(-7), Rational(0), Rational(3)}) / Rational(20)));
}

TEST(Tridiag, MatchesExplicitDeterminantRandomized) {
    for (int trial = 0; trial < 40; ++trial) {
        const long n = gen::integer(0, 5);
        std::vector<Rational> sigma, tau{Rational(0)};
        for (long k = 0; k <= n; ++k) sigma.push_back(gen::rational(9));
        for (long k = 1; k <= n; ++k) tau.push_back(gen::rational(9));
        SquareMatrix<Rational> m(static_cast<std::size_t>(n + 1));
        for (long i = 0; i <= n; ++i) {
            m(i, i) = sigma[i];
            if (i + 1 <= n) {
                m(i, i + 1) = Rational(1);
                m(i + 1, i) = tau[i + 1];
            }
        }
        EXPECT_EQ(tridiag_det_seq(sigma, tau, n).D(n), gen::leibniz_det(m));
    }
}

TEST(JFraction, B1MatchesEvenContraction) {
    const auto jf = jfraction_from_moments<RF>(MomentSequence::b2k1(), 4);
    const auto c = contract_even(alpha_table<RF>(12), 5);
    EXPECT_EQ(jf.c0, RF(Polynomial{Rational(0), Rational(1, 2)}));
    for (std::size_t j = 0; j <= 4; ++j) {
        EXPECT_EQ(jf.s[j], -c.sigma[j]) << j;
        if (j >= 1) {
            EXPECT_EQ(jf.t[j], c.tau[j]) << j;
        }
    }
}

TEST(JFraction, B3MatchesOddContraction) {
    const auto jf = jfraction_from_moments<RF>(MomentSequence::b2k3(), 4);
    const auto c = contract_odd(alpha_table<RF>(12), 5);
    for (std::size_t j = 0; j <= 4; ++j) {
        EXPECT_EQ(jf.s[j], -c.sigma[j]) << j;
        if (j >= 1) {
            EXPECT_EQ(jf.t[j], c.tau[j]) << j;
        }
    }
}

TEST(JFraction, DepthZeroAndDegeneracy) {
    const auto jf = jfraction_from_moments<Rational>(MomentSequence::power_sums(3), 0);
    EXPECT_EQ(jf.c0.str(), "3");
    EXPECT_EQ(jf.s[0], -Rational(14, 3));
    try {
        jfraction_from_moments<Rational>(MomentSequence::b2k1().at(Rational(3)), 3);
        FAIL() << "expected a nondegeneracy error";
    } catch (const NondegeneracyError& e) {
        EXPECT_EQ(e.index(), 2);
    }
}

TEST(HankelFromT, Examples) {
    const auto c = contract_even(alpha_table<RF>(4), 2);
    const RF c0(Polynomial{Rational(0), Rational(1, 2)});
    EXPECT_EQ(hankel_from_tcoeffs(c0, c.tau, 0), c0);
    const Polynomial x2 = Polynomial::monomial(Rational(1), 2);
    EXPECT_EQ(hankel_from_tcoeffs(c0, c.tau, 1), RF(x2 * x2_minus(1) * x2_minus(2) / Rational(720)));
    const auto jf5 = jfraction_from_moments<Rational>(MomentSequence::b2k3().at(Rational(5)), 1);
    EXPECT_EQ(hankel_from_tcoeffs(jf5.c0, jf5.t, 1), hankel_det<Rational>(MomentSequence::b2k3().at(Rational(5)), 1));
}

TEST(HankelFromT, ContractionConsistencyB1) {
    const auto c = contract_even(alpha_table<RF>(16), 7);
    const RF c0(Polynomial{Rational(0), Rational(1, 2)});
    for (long n = 0; n <= 6; ++n)
        EXPECT_EQ(hankel_from_tcoeffs(c0, c.tau, n), RF(hankel_det<Polynomial>(MomentSequence::b2k1(), n))) << n;
}

TEST(Series, MatchesBottomUpOracle) {
    for (const auto& seq : {MomentSequence::b2k1(), MomentSequence::b2k3(), MomentSequence::b2k5()})
        for (long xv : {9L, 11L, 13L}) {
            const auto at = seq.at(Rational(xv));
            const auto jf = jfraction_from_moments<Rational>(at, 3);
            const auto lib = series_from_jfraction(jf, 6);
            const auto oracle = nested_series(jf, 7);
            for (std::size_t k = 0; k <= 6; ++k) {
                EXPECT_EQ(lib[k], oracle[k]) << seq.name() << " x=" << xv << " k=" << k;
                EXPECT_EQ(lib[k], at.value_moment(static_cast<long>(k)));
            }
        }
}

TEST(Series, OrderZeroAndB1AtThree) {
    const auto jf = jfraction_from_moments<RF>(MomentSequence::b2k1(), 2);
    EXPECT_EQ(series_from_jfraction(jf, 0).size(), 1u);
    const auto s = series_from_jfraction(jf, 4);
    EXPECT_EQ(s[0].evaluate(Rational(3)).str(), "3/2");
    EXPECT_EQ(s[1].evaluate(Rational(3)).str(), "1");
    const auto b = MomentSequence::b2k1().at(Rational(3));
    for (long k = 0; k <= 4; ++k) EXPECT_EQ(s[static_cast<std::size_t>(k)].evaluate(Rational(3)), b.value_moment(k));
}

TEST(Series, RoundTripSymbolicThenEvaluated) {
    for (const auto& seq : {MomentSequence::b2k1(), MomentSequence::b2k3(), MomentSequence::b2k5()}) {
        const auto jf = jfraction_from_moments<RF>(seq, 4);
        const auto s = series_from_jfraction(jf, 8);
        for (long xv : {3L, 5L, 7L})
            for (long k = 0; k <= 8; ++k)
                EXPECT_EQ(s[static_cast<std::size_t>(k)].evaluate(Rational(xv)), seq.at(Rational(xv)).value_moment(k));
    }
}

TEST(Series, EquivalenceTransformPreservesSeries) {
    const auto kf = to_kfraction(jfraction_from_moments<Rational>(MomentSequence::b2k1().at(Rational(11)), 3));
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> r{Rational(1)};
        for (long m = 1; m <= kf.levels(); ++m) r.push_back(gen::nonzero_rational(20));
        EXPECT_EQ(approximant_series(equivalence_transform(kf, r), kf.levels(), 6), approximant_series(kf, kf.levels(), 6));
    }
    EXPECT_THROW(equivalence_transform(kf, {Rational(2)}), std::invalid_argument);
}

TEST(Series, SFractionEqualsEvenContraction) {
    // 1/(1 - alpha_1 w/(1 - alpha_2 w/ ...)) times x/2 is the b moment series.
    const auto s = approximant_series(sfraction(alpha_table<RF>(10)), 9, 7);
    const auto b = MomentSequence::b2k1();
    for (long k = 0; k <= 7; ++k)
        EXPECT_EQ(s[static_cast<std::size_t>(k)] * RF(b.symbolic_moment(0)), RF(b.symbolic_moment(k))) << k;
}

TEST(ShiftIdentities, SymbolicAllFamilies) {
    for (const auto& seq : {MomentSequence::b2k1(), MomentSequence::b2k3()})
        for (long n = 0; n <= 3; ++n)
            for (const auto& c : shift_identities_check<RF>(seq, n)) EXPECT_EQ(c.status, Status::pass) << c.identity << " " << c.lhs;
}

TEST(ShiftIdentities, NumericAtGenericPoints) {
    for (const auto& seq : {MomentSequence::b2k1(), MomentSequence::b2k3(), MomentSequence::b2k5()})
        for (long n = 0; n <= 4; ++n)
            for (const auto& c : shift_identities_check<Rational>(seq.at(Rational(2, 7)), n))
                EXPECT_EQ(c.status, Status::pass) << seq.name() << " n=" << n << " " << c.identity;
}

TEST(ShiftIdentities, DegeneracyIsReportedNotThrown) {
    const auto cases = shift_identities_check<Rational>(MomentSequence::b2k1().at(Rational(3)), 3);
    ASSERT_FALSE(cases.empty());
    EXPECT_EQ(cases[0].status, Status::fail);
    EXPECT_NE(cases[0].lhs.find("vanishes"), std::string::npos);
}

TEST(ShiftIdentities, FamilyRelations) {
    // H_n(c) = H_n(b) D_n^(0) and H_n(d) = H_n(c) D_n^(1).
    for (long n = 0; n <= 3; ++n) {
        const auto c0 = contract_even(alpha_table<RF>(2 * n + 4), n + 1);
        const auto c1 = contract_odd(alpha_table<RF>(2 * n + 4), n + 1);
        EXPECT_EQ(RF(hankel_det<Polynomial>(MomentSequence::b2k3(), n)),
                  RF(hankel_det<Polynomial>(MomentSequence::b2k1(), n)) * tridiag_det_seq(c0.sigma, c0.tau, n).D(n));
        EXPECT_EQ(RF(hankel_det<Polynomial>(MomentSequence::b2k5(), n)),
                  RF(hankel_det<Polynomial>(MomentSequence::b2k3(), n)) * tridiag_det_seq(c1.sigma, c1.tau, n).D(n));
    }
}
