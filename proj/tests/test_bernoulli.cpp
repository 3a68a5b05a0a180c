#include "oracles.hpp"

#include "stern/bernoulli.hpp"
#include "stern/error.hpp"

#include <gtest/gtest.h>

#include <set>
#include <thread>

using namespace stern;

namespace {

CyclotomicElement q(long n, long d = 1) { return CyclotomicElement(Rational(n, d)); }

DirichletCharacter chi8() { return make_character(CharacterKey::parse("2^3[0,1]")); }

std::vector<DirichletCharacter> characters_up_to(std::uint64_t limit) {
    std::vector<DirichletCharacter> out;
    for (std::uint64_t p : {2, 3, 5, 7}) {
        std::uint64_t pm = p;
        for (unsigned m = 1; pm <= limit; ++m, pm *= p) {
            if (pm < 3) {
                continue;
            }
            for (auto& chi : enumerate_characters(p, m)) {
                out.push_back(chi);
            }
        }
    }
    return out;
}

std::set<unsigned long> primes_of(Integer n) {
    std::set<unsigned long> out;
    if (n < 0) {
        n = -n;
    }
    for (unsigned long d = 2; n > 1; ++d) {
        while (n % d == 0) {
            out.insert(d);
            n /= d;
        }
    }
    return out;
}

}  // namespace

TEST(Bernoulli, Examples) {
    EXPECT_EQ(bernoulli_number(0), Rational(1));
    EXPECT_EQ(bernoulli_number(1), Rational(-1, 2));
    EXPECT_EQ(bernoulli_number(2), Rational(1, 6));
    EXPECT_EQ(bernoulli_number(4), Rational(-1, 30));
    EXPECT_EQ(bernoulli_number(12), Rational(-691, 2730));
    EXPECT_EQ(bernoulli_polynomial(1, Rational(0)), Rational(-1, 2));
    EXPECT_EQ(bernoulli_polynomial(2, Rational(1, 2)), Rational(-1, 12));
    for (unsigned k = 0; k <= 12; ++k) {
        EXPECT_EQ(bernoulli_polynomial(k, Rational(0)), bernoulli_number(k));
    }
}

TEST(Bernoulli, MatchesSeriesOracle) {
    const auto series = oracle::bernoulli_series(60);
    for (unsigned k = 0; k <= 60; ++k) {
        EXPECT_EQ(bernoulli_number(k), series[k]) << "k=" << k;
    }
}

TEST(Euler, Examples) {
    EXPECT_EQ(euler_number(0), 1);
    EXPECT_EQ(euler_number(1), 0);
    EXPECT_EQ(euler_number(2), -1);
    EXPECT_EQ(euler_number(4), 5);
    EXPECT_EQ(euler_number(6), -61);
    EXPECT_EQ(euler_number(8), 1385);
}

TEST(Euler, MatchesSechOracle) {
    const auto series = oracle::euler_series(40);
    for (unsigned k = 0; k <= 40; ++k) {
        EXPECT_EQ(Rational(euler_number(k)), series[k]) << "k=" << k;
    }
}

TEST(GeneralizedBernoulli, Examples) {
    EXPECT_EQ(generalized_bernoulli(1, chi_minus4()), q(-1, 2));
    EXPECT_EQ(generalized_bernoulli(2, chi8()), q(2));
    EXPECT_EQ(generalized_bernoulli(4, chi8()), q(-44));
}

TEST(GeneralizedBernoulli, MatchesGeneratingFunction) {
    for (const auto& chi : characters_up_to(27)) {
        const auto series = oracle::generalized_series(chi, 10);
        for (unsigned k = 0; k <= 10; ++k) {
            ASSERT_EQ(generalized_bernoulli(k, chi), series[k]) << chi.key().to_string() << " k=" << k;
            ASSERT_EQ(generalized_bernoulli_uncached(k, chi), series[k]) << chi.key().to_string() << " k=" << k;
        }
    }
}

TEST(GeneralizedBernoulli, WrongParityVanishes) {
    for (const auto& chi : characters_up_to(49)) {
        if (chi.is_trivial()) {
            continue;
        }
        const int sign = chi.parity() == Parity::even ? 1 : -1;
        for (unsigned k = 1; k <= 12; ++k) {
            const int expected_sign = k % 2 == 0 ? 1 : -1;
            if (sign != expected_sign) {
                ASSERT_TRUE(generalized_bernoulli(k, chi).is_zero()) << chi.key().to_string() << " k=" << k;
            }
        }
    }
}

TEST(GeneralizedBernoulli, DenominatorsComeFromTheConductor) {
    for (const auto& chi : characters_up_to(49)) {
        if (!chi.is_primitive()) {
            continue;
        }
        for (unsigned k = 0; k <= 12; ++k) {
            const auto x = generalized_bernoulli(k + 1, chi) * Rational(static_cast<long>((k + 1) * chi.conductor()));
            for (const auto& c : x.coeffs()) {
                for (const auto prime : primes_of(c.denominator())) {
                    ASSERT_EQ(chi.conductor() % prime, 0U) << chi.key().to_string() << " k=" << k;
                }
            }
        }
    }
}

TEST(GeneralizedBernoulli, ConcurrentMemoIsConsistent) {
    BernoulliCache::global().clear();
    const auto chars = enumerate_characters(5, 2);
    std::vector<std::vector<CyclotomicElement>> seen(4);
    {
        std::vector<std::jthread> pool;
        for (int t = 0; t < 4; ++t) {
            pool.emplace_back([&, t] {
                for (const auto& chi : chars) {
                    for (unsigned k = 0; k <= 8; ++k) {
                        seen[t].push_back(generalized_bernoulli(k, chi));
                    }
                }
            });
        }
    }
    for (int t = 1; t < 4; ++t) {
        EXPECT_EQ(seen[t], seen[0]);
    }
    for (const auto& [key, value] : BernoulliCache::global().generalized_snapshot()) {
        EXPECT_EQ(value, generalized_bernoulli_uncached(key.second, make_character(key.first)));
    }
}

TEST(LValues, Examples) {
    EXPECT_EQ(l_value(0, chi_minus4()), q(1, 2));
    EXPECT_EQ(l_value(1, chi8()), q(-1));
    EXPECT_THROW(l_value(1, chi_minus4()), ParityError);
    EXPECT_THROW(l_value(0, chi8()), ParityError);
}

TEST(LValues, EulerNumbersAreTwiceLOfChiMinus4) {
    for (unsigned k = 0; k <= 30; k += 2) {
        EXPECT_EQ(l_value(k, chi_minus4()) * Rational(2), CyclotomicElement(Rational(euler_number(k)))) << k;
    }
}

TEST(ScriptL, Examples) {
    EXPECT_EQ(script_l(1, chi8()), q(-2));
    EXPECT_EQ(script_l(3, chi8()), q(22));
    EXPECT_THROW(script_l(1, chi_minus4()), UndefinedCaseError);
    EXPECT_THROW(script_l(0, make_character(CharacterKey::parse("3^1[1]"))), UndefinedCaseError);
    EXPECT_THROW(script_l(0, make_character(CharacterKey::parse("3^2[3]"))), UndefinedCaseError);
}

TEST(ScriptL, IsIntegralAtP) {
    for (const auto& [p, ms] : std::vector<std::pair<std::uint64_t, std::vector<unsigned>>>{
             {2, {3, 4, 5}}, {3, {2, 3}}, {5, {2}}, {7, {2}}}) {
        for (const unsigned m : ms) {
            for (const auto& chi : enumerate_primitive(p, m)) {
                for (unsigned k = 0; k <= 20; ++k) {
                    if (!opposite_parity(k, chi)) {
                        continue;
                    }
                    const auto v = p_content_valuation(script_l(k, chi), p);
                    ASSERT_TRUE(v.at_least(p == 2 ? 1 : 0)) << chi.key().to_string() << " k=" << k;
                }
            }
        }
    }
}
