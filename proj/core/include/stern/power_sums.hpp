#pragma once

#include "stern/characters.hpp"
#include "stern/cyclotomic.hpp"

#include <cstdint>

namespace stern {

/// S_k(n, chi) = Sum_{j=1}^{n} chi(j) j^k by direct summation.
CyclotomicElement power_sum(unsigned k, std::uint64_t n, const DirichletCharacter& chi);

/// The same sum through (B_{k+1,chi}(N) - B_{k+1,chi}) / (k+1), where
/// B_{k+1,chi}(x) = Sum_j C(k+1, j) B_{j,chi} x^(k+1-j).
/// Throws DomainError unless N is a positive multiple of the modulus.
CyclotomicElement power_sum_via_bernoulli(unsigned k, std::uint64_t N, const DirichletCharacter& chi);

/// floor(num / den) for den > 0, correct for negative numerators.
std::int64_t floor_div(std::int64_t num, std::int64_t den);

/// Sum_{j=1}^{p^n - 1} chi(j) j^k floor(j a / p^n), without any chi(a) a^k
/// prefactor. Throws DomainError when p divides a.
CyclotomicElement floor_weighted_sum(unsigned k, std::int64_t a, std::uint64_t p, unsigned n,
                                     const DirichletCharacter& chi);

/// Untwisted variant: Sum_{j=1}^{p^n - 1} j^k floor(j a / p^n).
Integer floor_weighted_sum_plain(unsigned k, std::int64_t a, std::uint64_t p, unsigned n);

}  // namespace stern
