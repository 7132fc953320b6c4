#include "gen.hpp"

#include <bernhankel/bernoulli.hpp>

#include <gtest/gtest.h>

#include <thread>

using namespace bernhankel;

namespace {

Polynomial half_shift() { return Polynomial{Rational(1, 2), Rational(1, 2)}; }

}  // namespace

TEST(BernoulliNumber, SmallValues) {
    EXPECT_EQ(bernoulli_number(0).str(), "1");
    EXPECT_EQ(bernoulli_number(1).str(), "-1/2");
    EXPECT_EQ(bernoulli_number(2).str(), "1/6");
    EXPECT_EQ(bernoulli_number(3).str(), "0");
}

TEST(BernoulliNumber, AgreesWithAkiyamaTanigawa) {
    const auto oracle = gen::akiyama_tanigawa(41);
    for (long n = 0; n <= 40; ++n) EXPECT_EQ(bernoulli_number(n), oracle[static_cast<std::size_t>(n)]) << n;
}

TEST(BernoulliNumber, ConcurrentFillIsDeterministic) {
    std::vector<std::vector<Rational>> seen(4);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < seen.size(); ++t)
        pool.emplace_back([&seen, t] {
            for (long n = 80; n >= 0; --n) seen[t].push_back(bernoulli_number(n));
        });
    for (auto& th : pool) th.join();
    for (std::size_t t = 1; t < seen.size(); ++t) EXPECT_EQ(seen[t], seen[0]);
}

TEST(BernoulliPoly, Examples) {
    EXPECT_EQ(bernoulli_poly(1), Polynomial({Rational(-1, 2), Rational(1)}));
    EXPECT_EQ(bernoulli_half_shift(3), Polynomial({Rational(0), Rational(-1, 24), Rational(0), Rational(1, 24)}));
    const Polynomial x = Polynomial::x();
    const Polynomial x2 = x * x;
    EXPECT_EQ(bernoulli_half_shift(5), x * (x2 - Polynomial(1)) * (x2 * Rational(3) - Polynomial(7)) / Rational(480));
}

TEST(BernoulliPoly, OddValuesAtOneVanish) {
    for (long k = 1; k <= 20; ++k) EXPECT_TRUE(bernoulli_poly(2 * k + 1)(Rational(1)).is_zero()) << k;
}

TEST(BernoulliPoly, Reflection) {
    // B_m(1 - y) = (-1)^m B_m(y) with y = (1+x)/2.
    const Polynomial minus{Rational(1, 2), Rational(-1, 2)};
    for (long n = 0; n <= 20; ++n) {
        const Polynomial lhs = bernoulli_poly(n + 1).compose(minus);
        const Polynomial rhs = bernoulli_poly(n + 1).compose(half_shift());
        EXPECT_EQ(lhs, n % 2 == 0 ? -rhs : rhs) << n;
    }
}

TEST(BernoulliPoly, DifferenceEquation) {
    const Polynomial x_plus_1{Rational(1), Rational(1)};
    for (long n = 0; n <= 20; ++n) {
        const Polynomial b = bernoulli_poly(n + 1);
        EXPECT_EQ(b.compose(x_plus_1) - b, Polynomial::monomial(Rational(n + 1), static_cast<std::size_t>(n))) << n;
    }
}

TEST(BernoulliPoly, DerivativeLowersIndex) {
    for (long n = 1; n <= 20; ++n) EXPECT_EQ(bernoulli_poly(n).derivative(), bernoulli_poly(n - 1) * Rational(n));
}

TEST(PowerSum, Examples) {
    for (long r = 1; r <= 10; ++r) EXPECT_EQ(power_sum(0, r), Rational(r));
    EXPECT_EQ(power_sum(4, 3).str(), "98");
    EXPECT_EQ(power_sum(2, 2).str(), "5");
}

TEST(PowerSum, MatchesDirectLoop) {
    for (long k = 0; k <= 24; ++k)
        for (long r = 1; r <= 12; ++r) {
            Rational acc;
            for (long c = 1; c <= r; ++c) acc += pow(Rational(c), k);
            EXPECT_EQ(power_sum(k, r), acc);
        }
}

TEST(MomentSequence, FamilyExamples) {
    EXPECT_EQ(MomentSequence::b2k1().symbolic_moment(0), Polynomial({Rational(0), Rational(1, 2)}));
    EXPECT_EQ(MomentSequence::b2k3().symbolic_moment(0).str(), "[0, -1/24, 0, 1/24]");
    EXPECT_EQ(MomentSequence::power_sums(3).value_moment(1).str(), "14");
    EXPECT_EQ(MomentSequence::from_name("b2k5").name(), "b2k5");
    EXPECT_THROW(MomentSequence::from_name("b2k4"), std::invalid_argument);
    EXPECT_THROW(MomentSequence::from_name("powsum"), std::invalid_argument);
}

TEST(MomentSequence, ShiftedFamiliesCohere) {
    const auto b = MomentSequence::b2k1(), c = MomentSequence::b2k3(), d = MomentSequence::b2k5();
    for (long k = 0; k <= 15; ++k) {
        EXPECT_EQ(c.symbolic_moment(k), b.symbolic_moment(k + 1));
        EXPECT_EQ(d.symbolic_moment(k), c.symbolic_moment(k + 1));
        EXPECT_EQ(b.shifted(2).symbolic_moment(k), d.symbolic_moment(k));
    }
}

TEST(MomentSequence, OddPointMatchesPowerSums) {
    // At x = 2r+1 the b family is B_{2k+1}(r+1)/(2k+1) = I_{2k} for k >= 1.
    for (long r = 1; r <= 8; ++r) {
        const auto b = MomentSequence::b2k1().at(Rational(2 * r + 1));
        for (long k = 1; k <= 10; ++k) {
            EXPECT_EQ(b.value_moment(k), bernoulli_poly(2 * k + 1)(Rational(r + 1)) / Rational(2 * k + 1));
            EXPECT_EQ(b.value_moment(k), power_sum(2 * k, r));
        }
        EXPECT_EQ(b.value_moment(0), power_sum(0, r) + Rational(1, 2));
    }
}

TEST(MomentSequence, CustomAndEvaluation) {
    const auto s = MomentSequence::custom({Rational(1), Rational(2), Rational(5)});
    EXPECT_EQ(s.value_moment(2).str(), "5");
    EXPECT_THROW(s.value_moment(3), std::exception);
    const auto b = MomentSequence::b2k1();
    for (int trial = 0; trial < 20; ++trial) {
        const Rational x = gen::rational();
        EXPECT_EQ(b.at(x).value_moment(3), b.symbolic_moment(3)(x));
    }
}
