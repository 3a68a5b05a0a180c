#include "oracles.hpp"

#include "stern/cyclotomic.hpp"
#include "stern/error.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace stern;

namespace {

CyclotomicElement z(unsigned N, long j) { return CyclotomicElement::zeta(N, j); }
CyclotomicElement c(long v, unsigned N = 1) { return CyclotomicElement(Rational(v), N); }

}  // namespace

TEST(Rational, ParsePrintAndNormalise) {
    EXPECT_EQ(Rational::parse("6/-4").to_string(), "-3/2");
    EXPECT_EQ(Rational::parse("-10/5").to_string(), "-2");
    EXPECT_EQ(Rational(0).to_string(), "0");
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
    EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
}

TEST(Rational, Valuations) {
    EXPECT_EQ(integer_valuation(Integer(-60), 2), 2);
    EXPECT_EQ(rational_valuation(Rational(3, 40), 2), -3);
    EXPECT_EQ(rational_valuation(Rational(3, 40), 3), 1);
    EXPECT_EQ(binomial(10, 3), 120);
    EXPECT_TRUE(is_prime(97));
    EXPECT_FALSE(is_prime(91));
    EXPECT_FALSE(is_prime(1));
}

TEST(CyclotomicPolynomial, SmallOrders) {
    EXPECT_EQ(cyclotomic_polynomial(1), (IntPolynomial{-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), (IntPolynomial{1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(8), (IntPolynomial{1, 0, 0, 0, 1}));
}

TEST(CyclotomicPolynomial, MatchesDivisionOracle) {
    for (unsigned N = 1; N <= 60; ++N) {
        EXPECT_EQ(cyclotomic_polynomial(N), oracle::cyclotomic_by_division(N)) << "N=" << N;
        EXPECT_EQ(cyclotomic_polynomial(N).size(), euler_phi(N) + 1);
    }
}

TEST(Cyclotomic, ZetaIdentities) {
    EXPECT_EQ(z(4, 1) * z(4, 1), c(-1, 4));
    EXPECT_EQ(z(4, 1) * z(4, 1), CyclotomicElement::from_basis(4, {Rational(-1), Rational(0)}));
    EXPECT_EQ(z(8, 8), c(1, 8));
    EXPECT_EQ(z(3, 1) + z(3, 2), c(-1, 3));
    EXPECT_EQ((c(1, 3) - z(3, 1)) * (c(1, 3) - z(3, 2)), c(3, 3));
    EXPECT_EQ(c(2).inverse(), CyclotomicElement(Rational(1, 2)));
    for (unsigned N : {3U, 5U, 8U, 12U, 18U}) {
        for (long j = 0; j < static_cast<long>(N); ++j) {
            EXPECT_EQ(z(N, j).inverse(), z(N, (N - j) % N));
        }
    }
}

TEST(Cyclotomic, ZetaPowersMultiply) {
    for (unsigned N = 1; N <= 48; ++N) {
        for (long j = 0; j < static_cast<long>(N); ++j) {
            for (long k = 0; k < static_cast<long>(N); ++k) {
                ASSERT_EQ(z(N, j) * z(N, k), z(N, j + k)) << N << " " << j << " " << k;
            }
        }
    }
}

TEST(Cyclotomic, MixedOrdersEmbedIntoLcm) {
    const auto s = z(4, 1) + z(6, 1);
    EXPECT_EQ(s.order(), 12U);
    EXPECT_EQ(z(4, 1).embed(12), z(12, 3));
    EXPECT_EQ(z(3, 1) * z(4, 1), z(12, 7));
}

TEST(Cyclotomic, DivisionByZeroThrows) {
    EXPECT_THROW(c(0, 5).inverse(), DivisionByZeroError);
    EXPECT_THROW(c(1, 5) / c(0, 5), DivisionByZeroError);
}

TEST(Cyclotomic, RingAxiomsOnRandomElements) {
    std::mt19937_64 rng(20240611);
    for (unsigned N : {1U, 3U, 4U, 5U, 8U, 9U, 12U, 16U, 20U}) {
        for (int trial = 0; trial < 25; ++trial) {
            const auto x = oracle::random_element(rng, N);
            const auto y = oracle::random_element(rng, N);
            const auto w = oracle::random_element(rng, N);
            ASSERT_EQ((x + y) * w, x * w + y * w);
            ASSERT_EQ(x * y, y * x);
            ASSERT_EQ((x * y) * w, x * (y * w));
            if (!x.is_zero()) {
                ASSERT_EQ(x.inverse() * x, c(1, N));
                ASSERT_EQ((y / x) * x, y);
            }
        }
    }
}

TEST(Valuation, ContentExamples) {
    EXPECT_EQ(p_content_valuation(c(8, 8) * z(8, 1) + c(2, 8), 2), Valuation(1));
    EXPECT_EQ(p_content_valuation(c(1, 4) - z(4, 1), 2), Valuation(0));
    EXPECT_TRUE(p_content_valuation(c(0, 7), 7).is_infinite());
    EXPECT_EQ(Valuation::parse("inf"), Valuation::infinity());
    EXPECT_EQ(Valuation::parse("-3"), Valuation(-3));
    EXPECT_EQ(Valuation(4).to_string(), "4");
}

TEST(Valuation, CongruenceExamples) {
    auto r = congruent_mod(c(16), c(0), 2, 4);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.margin, Valuation(4));
    r = congruent_mod(c(-60), c(0), 2, 3);
    EXPECT_FALSE(r.holds);
    EXPECT_EQ(r.margin, Valuation(2));
    r = congruent_mod(c(1, 3) - z(3, 1), c(0, 3), 3, 1);
    EXPECT_FALSE(r.holds);
    EXPECT_EQ(r.margin, Valuation(0));
}

TEST(Valuation, LocalDivisibility) {
    EXPECT_TRUE(divides_p_locally(c(1, 4) - z(4, 1), c(2, 4), 2));
    EXPECT_TRUE(divides_p_locally(c(1, 3) - z(3, 1), c(3, 3), 3));
    EXPECT_FALSE(divides_p_locally(c(3), c(1), 3));
    EXPECT_THROW(divides_p_locally(c(0), c(1), 3), DivisionByZeroError);
}

TEST(Valuation, UnitsAtP) {
    EXPECT_FALSE(is_p_unit(c(1, 3) - z(3, 1), 3));
    EXPECT_TRUE(is_p_unit(c(2, 3), 3));
    // 2 + i has norm 5; 1 + i has norm 2
    EXPECT_FALSE(is_p_unit(c(2, 4) + z(4, 1), 5));
    EXPECT_TRUE(is_p_unit(c(1, 4) + z(4, 1), 5));
    EXPECT_FALSE(is_p_unit(c(1, 4) + z(4, 1), 2));
    EXPECT_FALSE(is_p_unit(CyclotomicElement(Rational(1, 3), 4), 3));
    EXPECT_FALSE(is_p_unit(c(0, 4), 3));
}

TEST(Valuation, ContentProperties) {
    std::mt19937_64 rng(7);
    for (unsigned N : {4U, 6U, 8U, 9U, 10U}) {
        for (unsigned long p : {2UL, 3UL, 5UL}) {
            for (int trial = 0; trial < 30; ++trial) {
                const auto x = oracle::random_element(rng, N, 40);
                const auto y = oracle::random_element(rng, N, 40);
                const auto vx = p_content_valuation(x, p);
                if (!vx.is_infinite()) {
                    ASSERT_EQ(p_content_valuation(x * Rational(static_cast<long>(p)), p), Valuation(vx.value() + 1));
                }
                ASSERT_GE(p_content_valuation(x + y, p), std::min(vx, p_content_valuation(y, p)));
            }
        }
    }
}

TEST(Valuation, CongruenceIsTransitive) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> small(-3, 3);
    for (int trial = 0; trial < 300; ++trial) {
        const unsigned N = 8;
        const long n = 1 + trial % 4;
        const auto x = oracle::random_element(rng, N);
        const auto pn = Rational(2).pow(n);
        const auto y = x + oracle::random_element(rng, N) * pn * Rational(small(rng));
        const auto w = y + oracle::random_element(rng, N) * pn;
        if (congruent_mod(x, y, 2, n).holds && congruent_mod(y, w, 2, n).holds) {
            ASSERT_TRUE(congruent_mod(x, w, 2, n).holds);
        }
    }
}

TEST(Valuation, PredicatesSurviveEmbedding) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const unsigned N = trial % 2 ? 4 : 6;
        const auto x = oracle::random_element(rng, N);
        const auto y = oracle::random_element(rng, N);
        for (unsigned scale : {2U, 3U, 5U}) {
            const auto X = x.embed(N * scale);
            const auto Y = y.embed(N * scale);
            for (unsigned long p : {2UL, 3UL}) {
                ASSERT_EQ(p_content_valuation(x, p), p_content_valuation(X, p));
                ASSERT_EQ(congruent_mod(x, y, p, 1).holds, congruent_mod(X, Y, p, 1).holds);
                ASSERT_EQ(is_p_unit(x, p), is_p_unit(X, p));
                if (!y.is_zero()) {
                    ASSERT_EQ(divides_p_locally(y, x, p), divides_p_locally(Y, X, p));
                }
            }
        }
    }
}

TEST(RootOfUnity, Orders) {
    EXPECT_EQ(root_of_unity_order(c(-1)), 2U);
    EXPECT_EQ(root_of_unity_order(z(18, 6)), 3U);
    EXPECT_EQ(root_of_unity_order(z(8, 1) * c(-1, 8)), 8U);
    EXPECT_EQ(root_of_unity_order(z(3, 1) * c(-1, 3)), 6U);
    EXPECT_THROW(root_of_unity_order(c(1, 4) + z(4, 1)), NotRootOfUnityError);
    EXPECT_THROW(root_of_unity_order(c(2)), NotRootOfUnityError);
}
