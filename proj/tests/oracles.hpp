#pragma once

// Reference computations that share no code path with the library's
// recurrences: power-series expansion for B_k, E_k and B_{k,chi}, repeated
// division for Phi_N, and brute force for discrete logs and power sums.

#include "stern/characters.hpp"
#include "stern/cyclotomic.hpp"
#include "stern/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using stern::CyclotomicElement;
using stern::Integer;
using stern::Rational;

inline Rational fact(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) {
        f *= i;
    }
    return Rational(f);
}

/// 1 / a as a power series to len terms; a[0] must be non-zero.
template <class T>
std::vector<T> series_inverse(const std::vector<T>& a, std::size_t len, const T& one) {
    std::vector<T> b(len, one - one);
    const T inv0 = one / a[0];
    b[0] = inv0;
    for (std::size_t n = 1; n < len; ++n) {
        T acc = one - one;
        for (std::size_t j = 1; j <= n && j < a.size(); ++j) {
            acc = acc + a[j] * b[n - j];
        }
        b[n] = (one - one) - acc * inv0;
    }
    return b;
}

/// B_0..B_K from t / (e^t - 1) = 1 / Sum t^j / (j+1)!.
inline std::vector<Rational> bernoulli_series(unsigned K) {
    std::vector<Rational> denom(K + 1);
    for (unsigned j = 0; j <= K; ++j) {
        denom[j] = Rational(1) / fact(j + 1);
    }
    const auto inv = series_inverse(denom, K + 1, Rational(1));
    std::vector<Rational> out(K + 1);
    for (unsigned k = 0; k <= K; ++k) {
        out[k] = inv[k] * fact(k);
    }
    return out;
}

/// E_0..E_K from sech t = 1 / cosh t.
inline std::vector<Rational> euler_series(unsigned K) {
    std::vector<Rational> cosh(K + 1);
    for (unsigned j = 0; j <= K; j += 2) {
        cosh[j] = Rational(1) / fact(j);
    }
    const auto inv = series_inverse(cosh, K + 1, Rational(1));
    std::vector<Rational> out(K + 1);
    for (unsigned k = 0; k <= K; ++k) {
        out[k] = inv[k] * fact(k);
    }
    return out;
}

/// B_{0,chi}..B_{K,chi} from Sum_a chi(a) t e^{at} / (e^{ft} - 1), f the modulus.
inline std::vector<CyclotomicElement> generalized_series(const stern::DirichletCharacter& chi, unsigned K) {
    const unsigned N = chi.field_order();
    const long f = static_cast<long>(chi.modulus());
    const CyclotomicElement zero(Rational(0), N);
    const CyclotomicElement one(Rational(1), N);
    // (e^{ft} - 1) / t = Sum f^{j+1} t^j / (j+1)!
    std::vector<CyclotomicElement> denom(K + 1, zero);
    for (unsigned j = 0; j <= K; ++j) {
        denom[j] = CyclotomicElement(Rational(f).pow(j + 1) / fact(j + 1), N);
    }
    const auto inv = series_inverse(denom, K + 1, one);
    // Sum_a chi(a) e^{at} = Sum_i (Sum_a chi(a) a^i) t^i / i!
    std::vector<CyclotomicElement> numer(K + 1, zero);
    for (long a = 1; a <= f; ++a) {
        const auto c = chi(a);
        if (c.is_zero()) {
            continue;
        }
        for (unsigned i = 0; i <= K; ++i) {
            numer[i] = numer[i] + c * (Rational(a).pow(i) / fact(i));
        }
    }
    std::vector<CyclotomicElement> out(K + 1, zero);
    for (unsigned k = 0; k <= K; ++k) {
        CyclotomicElement acc = zero;
        for (unsigned i = 0; i <= k; ++i) {
            acc = acc + numer[i] * inv[k - i];
        }
        out[k] = acc * fact(k);
    }
    return out;
}

/// Phi_N by dividing x^N - 1 by Phi_d for every proper divisor d.
inline std::vector<Integer> cyclotomic_by_division(unsigned N) {
    std::vector<std::vector<Integer>> phi(N + 1);
    for (unsigned n = 1; n <= N; ++n) {
        if (N % n != 0 && n != N) {
            continue;
        }
        std::vector<Integer> poly(n + 1, 0);
        poly[0] = -1;
        poly[n] = 1;
        for (unsigned d = 1; d < n; ++d) {
            if (n % d != 0) {
                continue;
            }
            if (phi[d].empty()) {
                // divisors of divisors of N are divisors of N
                continue;
            }
            const auto& g = phi[d];
            std::vector<Integer> q(poly.size() - g.size() + 1, 0);
            for (std::size_t i = q.size(); i-- > 0;) {
                q[i] = poly[i + g.size() - 1];
                for (std::size_t j = 0; j < g.size(); ++j) {
                    poly[i + j] -= q[i] * g[j];
                }
            }
            poly = q;
        }
        phi[n] = poly;
    }
    return phi[N];
}

/// Smallest exponents with g1^e1 g2^e2 == a mod modulus, by search.
inline std::vector<std::uint64_t> brute_dlog(const stern::UnitGroup& group, std::int64_t a) {
    const auto M = static_cast<std::int64_t>(group.modulus());
    const auto target = ((a % M) + M) % M;
    const auto& gens = group.generators();
    std::vector<std::uint64_t> e(gens.size(), 0);
    const auto value = [&] {
        std::int64_t v = 1;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            for (std::uint64_t t = 0; t < e[i]; ++t) {
                v = v * static_cast<std::int64_t>(gens[i].residue) % M;
            }
        }
        return v;
    };
    // odometer over all exponent vectors
    while (true) {
        if (value() == target) {
            return e;
        }
        std::size_t i = 0;
        while (i < e.size() && ++e[i] == gens[i].order) {
            e[i] = 0;
            ++i;
        }
        if (i == e.size()) {
            return {};
        }
    }
}

/// Sum_{j<=n} chi(j) j^k with one field operation per term.
inline CyclotomicElement direct_power_sum(unsigned k, std::uint64_t n, const stern::DirichletCharacter& chi) {
    CyclotomicElement acc(Rational(0), chi.field_order());
    for (std::uint64_t j = 1; j <= n; ++j) {
        acc = acc + chi(static_cast<std::int64_t>(j)) * Rational(static_cast<long>(j)).pow(k);
    }
    return acc;
}

/// Random element of Q(zeta_N) with small numerators and denominators.
inline CyclotomicElement random_element(std::mt19937_64& rng, unsigned N, int span = 6) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> c;
    for (std::uint64_t i = 0; i < stern::euler_phi(N); ++i) {
        c.emplace_back(num(rng), den(rng));
    }
    return CyclotomicElement::from_basis(N, std::move(c));
}

}  // namespace oracle
