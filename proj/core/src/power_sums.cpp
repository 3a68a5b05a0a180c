#include "stern/power_sums.hpp"

#include "stern/bernoulli.hpp"
#include "stern/error.hpp"

#include <vector>

namespace stern {

namespace {

std::int64_t int_pow(std::uint64_t p, unsigned n) {
    std::int64_t out = 1;
    for (unsigned i = 0; i < n; ++i) {
        out *= static_cast<std::int64_t>(p);
    }
    return out;
}

}  // namespace

CyclotomicElement power_sum(unsigned k, std::uint64_t n, const DirichletCharacter& chi) {
    const unsigned order = chi.field_order();
    std::vector<Integer> buckets(order, 0);
    for (std::uint64_t j = 1; j <= n; ++j) {
        const long e = chi.value_exponent(static_cast<std::int64_t>(j));
        if (e < 0) {
            continue;
        }
        buckets[static_cast<std::size_t>(e)] += ipow(Integer(static_cast<unsigned long>(j)), k);
    }
    return CyclotomicElement::from_powers(order, std::span<const Integer>(buckets));
}

CyclotomicElement power_sum_via_bernoulli(unsigned k, std::uint64_t N, const DirichletCharacter& chi) {
    if (N == 0 || N % chi.modulus() != 0) {
        throw DomainError("power_sum_via_bernoulli: N = " + std::to_string(N) + " is not a multiple of " +
                          std::to_string(chi.modulus()));
    }
    const Rational x(Integer(static_cast<unsigned long>(N)));
    // B_{k+1,chi}(N) - B_{k+1,chi}(0): every j <= k term survives, j = k+1 cancels.
    CyclotomicElement acc(Rational(0), chi.field_order());
    for (unsigned j = 0; j <= k; ++j) {
        const Rational weight = Rational(binomial(k + 1, j)) * x.pow(static_cast<long>(k + 1 - j));
        acc += generalized_bernoulli(j, chi) * weight;
    }
    return acc * Rational(1, static_cast<long>(k) + 1);
}

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
    std::int64_t q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) {
        --q;
    }
    return q;
}

CyclotomicElement floor_weighted_sum(unsigned k, std::int64_t a, std::uint64_t p, unsigned n,
                                     const DirichletCharacter& chi) {
    if (a % static_cast<std::int64_t>(p) == 0) {
        throw DomainError("floor_weighted_sum: p = " + std::to_string(p) + " divides a = " + std::to_string(a));
    }
    const std::int64_t pn = int_pow(p, n);
    const unsigned order = chi.field_order();
    std::vector<Integer> buckets(order, 0);
    for (std::int64_t j = 1; j < pn; ++j) {
        const long e = chi.value_exponent(j);
        if (e < 0) {
            continue;
        }
        const std::int64_t fl = floor_div(j * a, pn);
        if (fl == 0) {
            continue;
        }
        buckets[static_cast<std::size_t>(e)] +=
            ipow(Integer(static_cast<long>(j)), k) * Integer(static_cast<long>(fl));
    }
    return CyclotomicElement::from_powers(order, std::span<const Integer>(buckets));
}

Integer floor_weighted_sum_plain(unsigned k, std::int64_t a, std::uint64_t p, unsigned n) {
    const std::int64_t pn = int_pow(p, n);
    Integer acc = 0;
    for (std::int64_t j = 1; j < pn; ++j) {
        acc += ipow(Integer(static_cast<long>(j)), k) * Integer(static_cast<long>(floor_div(j * a, pn)));
    }
    return acc;
}

}  // namespace stern
