#pragma once

#include "stern/rational.hpp"

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace stern {

/// Integer polynomial, coefficients listed from the constant term upward.
using IntPolynomial = std::vector<Integer>;

/// The N-th cyclotomic polynomial, monic of degree phi(N).
IntPolynomial cyclotomic_polynomial(unsigned order);

std::uint64_t euler_phi(std::uint64_t n);

/// Precomputed data for Q(zeta_N): the modulus polynomial and the power-basis
/// image of every zeta_N^e, 0 <= e < N. Instances are shared and immutable.
struct CyclotomicField {
    unsigned order = 1;
    unsigned degree = 1;
    IntPolynomial modulus;
    std::vector<std::vector<Integer>> power_image;
};

/// Thread-safe registry lookup; the returned reference lives for the process.
const CyclotomicField& cyclotomic_field(unsigned order);

/// p-adic valuation that may be +infinity (exactly for zero).
class Valuation {
public:
    constexpr Valuation() = default;
    constexpr explicit Valuation(long v) : value_(v), infinite_(false) {}
    static constexpr Valuation infinity() { return Valuation(); }

    constexpr bool is_infinite() const { return infinite_; }
    /// Finite value. For +infinity returns LONG_MAX so comparisons stay ordered.
    constexpr long value() const { return infinite_ ? std::numeric_limits<long>::max() : value_; }
    constexpr bool at_least(long n) const { return infinite_ || value_ >= n; }

    friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
    friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        return a.value() <=> b.value();
    }

    /// "inf" or the decimal value.
    std::string to_string() const;
    static Valuation parse(const std::string& text);

private:
    long value_ = 0;
    bool infinite_ = true;
};

/// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1},
/// always fully reduced modulo Phi_N, so equality within one field is
/// coefficient-wise. Operands of different orders are embedded into the
/// field of the lcm order before combining.
class CyclotomicElement {
public:
    /// Zero of Q(zeta_1) = Q.
    CyclotomicElement();
    /// Rational constant viewed in Q(zeta_order).
    explicit CyclotomicElement(const Rational& value, unsigned order = 1);

    /// Coefficients of 1, zeta, zeta^2, ...; any length. Powers at or above
    /// phi(N) are reduced (exponents are taken mod N first).
    static CyclotomicElement from_powers(unsigned order, std::span<const Rational> powers);
    static CyclotomicElement from_powers(unsigned order, std::span<const Integer> powers);
    /// Takes exactly phi(order) power-basis coefficients. Throws
    /// std::invalid_argument on a length mismatch.
    static CyclotomicElement from_basis(unsigned order, std::vector<Rational> coeffs);

    /// zeta_N^(j mod N).
    static CyclotomicElement zeta(unsigned order, long exponent);

    unsigned order() const { return order_; }
    std::span<const Rational> coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws std::domain_error when the element is not rational.
    Rational as_rational() const;

    /// Same element viewed in Q(zeta_target); target must be a multiple of order().
    CyclotomicElement embed(unsigned target) const;

    CyclotomicElement& operator+=(const CyclotomicElement& o);
    CyclotomicElement& operator-=(const CyclotomicElement& o);
    CyclotomicElement& operator*=(const CyclotomicElement& o);
    CyclotomicElement& operator*=(const Rational& r);
    CyclotomicElement& operator/=(const CyclotomicElement& o);

    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
    friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
    friend CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b) { return a *= b; }
    friend CyclotomicElement operator*(CyclotomicElement a, const Rational& b) { return a *= b; }
    friend CyclotomicElement operator*(const Rational& b, CyclotomicElement a) { return a *= b; }
    friend CyclotomicElement operator/(CyclotomicElement a, const CyclotomicElement& b) { return a /= b; }
    CyclotomicElement operator-() const;

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// Phi_N over Q. Throws DivisionByZeroError for zero.
    CyclotomicElement inverse() const;
    /// Integer power; negative exponents go through inverse().
    CyclotomicElement pow(long e) const;

    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);
    friend bool operator==(const CyclotomicElement& a, const Rational& r) {
        return a.is_rational() && a.coeffs_[0] == r;
    }

    /// Human-readable polynomial in z<N>, or a plain rational when rational.
    std::string to_string() const;

private:
    CyclotomicElement(unsigned order, std::vector<Rational> coeffs, int /*tag*/)
        : order_(order), coeffs_(std::move(coeffs)) {}

    unsigned order_ = 1;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CyclotomicElement& x);

/// Minimum rational p-adic valuation over the power-basis coefficients.
/// Since Z[zeta_N] is the full ring of integers, x lies in
/// p^v Z_(p)[zeta_N] exactly when v <= this value.
Valuation p_content_valuation(const CyclotomicElement& x, unsigned long p);

struct CongruenceCheck {
    bool holds = false;
    Valuation margin;
};

/// x == y (mod p^n) in Z_(p)[zeta]; margin is the content valuation of x - y.
CongruenceCheck congruent_mod(const CyclotomicElement& x, const CyclotomicElement& y,
                              unsigned long p, long n);

/// True when x / d lies in Z_(p)[zeta]. Throws DivisionByZeroError for d = 0.
bool divides_p_locally(const CyclotomicElement& d, const CyclotomicElement& x, unsigned long p);

/// True when x is a unit of Z_(p)[zeta_N], i.e. x is an algebraic integer at
/// p lying in no prime ideal above p ("prime to p"). Decided by a gcd with
/// Phi_N over F_p.
bool is_p_unit(const CyclotomicElement& x, unsigned long p);

/// Smallest t >= 1 with x^t = 1. Throws NotRootOfUnityError otherwise.
unsigned root_of_unity_order(const CyclotomicElement& x);

}  // namespace stern
