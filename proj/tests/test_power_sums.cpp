#include "oracles.hpp"

#include "stern/error.hpp"
#include "stern/power_sums.hpp"

#include <gtest/gtest.h>

using namespace stern;

namespace {

CyclotomicElement q(long n) { return CyclotomicElement(Rational(n)); }

DirichletCharacter chi8() { return make_character(CharacterKey::parse("2^3[0,1]")); }

const std::vector<std::pair<std::uint64_t, unsigned>> kModuli{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3},
                                                              {5, 1}, {5, 2}, {7, 1}, {7, 2}};

}  // namespace

TEST(PowerSum, Examples) {
    EXPECT_EQ(power_sum(1, 4, chi_minus4()), q(-2));
    EXPECT_EQ(power_sum(2, 8, chi8()), q(16));
    for (const auto& chi : enumerate_characters(5, 2)) {
        if (!chi.is_trivial()) {
            EXPECT_TRUE(power_sum(0, 25, chi).is_zero());
            EXPECT_TRUE(power_sum_via_bernoulli(0, 25, chi).is_zero());
        }
    }
    EXPECT_EQ(power_sum_via_bernoulli(2, 8, chi8()), q(16));
    EXPECT_EQ(power_sum_via_bernoulli(1, 4, chi_minus4()), q(-2));
    EXPECT_THROW(power_sum_via_bernoulli(1, 6, chi_minus4()), DomainError);
}

TEST(PowerSum, MatchesDirectSummation) {
    for (const auto& [p, m] : kModuli) {
        for (const auto& chi : enumerate_characters(p, m)) {
            for (unsigned k : {0U, 1U, 5U}) {
                for (std::uint64_t n : {1UL, 7UL, chi.modulus() + 3}) {
                    ASSERT_EQ(power_sum(k, n, chi), oracle::direct_power_sum(k, n, chi));
                }
            }
        }
    }
}

TEST(PowerSum, AgreesWithBernoulliFormula) {
    for (const auto& [p, m] : kModuli) {
        for (const auto& chi : enumerate_characters(p, m)) {
            for (unsigned k = 0; k <= 12; ++k) {
                for (const std::uint64_t N : {chi.modulus(), chi.modulus() * p}) {
                    ASSERT_EQ(power_sum(k, N, chi), power_sum_via_bernoulli(k, N, chi))
                        << chi.key().to_string() << " k=" << k << " N=" << N;
                }
            }
        }
    }
}

TEST(FloorSum, Examples) {
    EXPECT_EQ(floor_weighted_sum(1, 3, 2, 3, chi8()), q(6));
    EXPECT_EQ(floor_weighted_sum_plain(3, 2, 5, 1), 91);
    for (const auto& chi : enumerate_characters(3, 2)) {
        EXPECT_TRUE(floor_weighted_sum(4, 1, 3, 2, chi).is_zero());
    }
    EXPECT_THROW(floor_weighted_sum(1, 4, 2, 3, chi8()), DomainError);
    EXPECT_EQ(floor_div(-7, 2), -4);
    EXPECT_EQ(floor_div(7, 2), 3);
}

TEST(FloorSum, MatchesDirectDefinition) {
    for (const auto& chi : enumerate_characters(5, 1)) {
        for (std::int64_t a : {-3L, 2L, 7L}) {
            for (unsigned k = 0; k <= 4; ++k) {
                CyclotomicElement expected(Rational(0), chi.field_order());
                for (std::int64_t j = 1; j < 25; ++j) {
                    expected = expected + chi(j) * Rational(static_cast<long>(j)).pow(k) *
                                              Rational(static_cast<long>(floor_div(j * a, 25)));
                }
                ASSERT_EQ(floor_weighted_sum(k, a, 5, 2, chi), expected);
            }
        }
    }
}
