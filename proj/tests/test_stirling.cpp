#include <bernhankel/stirling.hpp>

#include <gtest/gtest.h>

using namespace bernhankel;

TEST(Stirling, FirstKindExamples) {
    EXPECT_EQ(stirling_first(3, 3).str(), "1");
    EXPECT_EQ(stirling_first(3, 2).str(), "-3");
    EXPECT_EQ(stirling_first(3, 1).str(), "2");
    EXPECT_EQ(stirling_first(0, 0).str(), "1");
}

TEST(Stirling, SecondKindExamples) {
    EXPECT_EQ(stirling_second(3, 3).str(), "1");
    EXPECT_EQ(stirling_second(3, 2).str(), "3");
    EXPECT_TRUE(bernoulli_via_stirling(3).is_zero());
}

TEST(Stirling, FallingFactorialRows) {
    for (long n = 1; n <= 8; ++n)
        for (long xv = -5; xv <= 9; ++xv) {
            Rational falling(1), sum;
            for (long i = 0; i < n; ++i) falling *= Rational(xv - i);
            for (long k = 0; k <= n; ++k) sum += stirling_first(n, k) * pow(Rational(xv), k);
            EXPECT_EQ(sum, falling) << n << " at " << xv;
        }
}

TEST(Stirling, SecondKindByInclusionExclusion) {
    for (long n = 0; n <= 12; ++n)
        for (long k = 0; k <= n; ++k) {
            Rational acc;
            for (long j = 0; j <= k; ++j) {
                Rational term = binomial(k, j) * pow(Rational(j), n);
                acc += (k - j) % 2 == 0 ? term : -term;
            }
            EXPECT_EQ(stirling_second(n, k), acc / factorial(k)) << n << "," << k;
        }
}

TEST(Stirling, Diagonals) {
    for (long n = 1; n <= 15; ++n) {
        EXPECT_EQ(stirling_first(n, n).str(), "1");
        EXPECT_EQ(stirling_second(n, n).str(), "1");
        EXPECT_EQ(t_triangle(n, n).str(), "1");
    }
}

TEST(Stirling, KindsAreInverse) {
    for (long n = 0; n <= 10; ++n)
        for (long m = 0; m <= 10; ++m) {
            Rational acc;
            for (long k = 0; k <= 10; ++k) acc += stirling_first(n, k) * stirling_second(k, m);
            EXPECT_EQ(acc, Rational(n == m ? 1 : 0));
        }
}

TEST(Stirling, BernoulliExpansion) {
    for (long m = 0; m <= 30; ++m) EXPECT_EQ(bernoulli_via_stirling(m), bernoulli_number(m)) << m;
}

TEST(TTriangle, Examples) {
    EXPECT_EQ(t_triangle(1, 1).str(), "1");
    EXPECT_EQ(t_triangle(2, 1).str(), "-1");
    EXPECT_EQ(t_triangle(2, 2).str(), "1");
    EXPECT_EQ(t_triangle(3, 1).str(), "4");
    EXPECT_EQ(t_triangle(3, 2).str(), "-5");
    EXPECT_EQ(t_triangle(3, 3).str(), "1");
    EXPECT_EQ(t_triangle(3, 4).str(), "0");
    EXPECT_THROW(t_triangle(0, 0), std::domain_error);
}

TEST(TTriangle, RowsAreProductCoefficients) {
    // Row n holds the coefficients of prod_{m=1}^{n-1} (y - m^2).
    for (long n = 1; n <= 12; ++n) {
        Polynomial prod(1);
        for (long m = 1; m < n; ++m) prod = prod * Polynomial{Rational(-m * m), Rational(1)};
        for (long k = 1; k <= n; ++k) EXPECT_EQ(t_triangle(n, k), prod[static_cast<std::size_t>(k - 1)]);
    }
}

TEST(TTriangle, AlternativeExpression) {
    EXPECT_EQ(t_alternative(3, 2).str(), "-5");
    EXPECT_EQ(t_alternative(2, 2).str(), "1");
    for (long n = 1; n <= 10; ++n)
        for (long k = 1; k <= n; ++k) EXPECT_EQ(t_alternative(n, k), t_triangle(n, k)) << n << "," << k;
}

TEST(NullVector, Examples) {
    EXPECT_EQ(null_vector(1), (std::vector<Rational>{Rational(-1), Rational(1)}));
    EXPECT_EQ(null_vector(2), (std::vector<Rational>{Rational(4), Rational(-5), Rational(1)}));
    for (long r = 1; r <= 10; ++r)
        for (const auto& c : null_vector_check(r)) EXPECT_EQ(c.status, Status::pass) << c.identity << " r=" << r;
}

TEST(NullVector, TelescopingStep) {
    // sum_k c^{2k} T(m+1,k+1) = (c^2 - m^2) sum_k c^{2k} T(m,k+1).
    auto inner = [](long rows, long c) {
        Rational acc;
        for (long k = 0; k < rows; ++k) acc += pow(Rational(c * c), k) * t_triangle(rows, k + 1);
        return acc;
    };
    for (long m = 1; m <= 10; ++m)
        for (long c = 1; c <= 12; ++c) EXPECT_EQ(inner(m + 1, c), Rational(c * c - m * m) * inner(m, c));
}

TEST(StirlingIdentity, VanishesLiterallyAndByShortcut) {
    EXPECT_TRUE(corollary_identity(1, 0).is_zero());
    for (long j = 0; j <= 2; ++j) EXPECT_TRUE(corollary_identity(2, j).is_zero());
    for (long r = 1; r <= 8; ++r)
        for (long j = 0; j <= r; ++j) {
            EXPECT_TRUE(corollary_identity(r, j).is_zero()) << r << "," << j;
            EXPECT_TRUE(corollary_shortcut(r, j).is_zero()) << r << "," << j;
        }
    EXPECT_THROW(corollary_identity(2, 3), std::domain_error);
}
