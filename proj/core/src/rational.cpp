#include "stern/rational.hpp"

#include "stern/error.hpp"

#include <ostream>
#include <stdexcept>

namespace stern {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw DivisionByZeroError("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    auto parse_int = [](std::string_view s) {
        Integer v;
        if (s.empty() || v.set_str(std::string(s), 10) != 0) {
            throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
        }
        return v;
    };
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    const Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(parse_int(text.substr(0, slash)), den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw DivisionByZeroError("rational division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw DivisionByZeroError("inverse of zero");
    }
    return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(long e) const {
    if (e < 0) {
        return inverse().pow(-e);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

long integer_valuation(const Integer& n, unsigned long p) {
    if (n == 0) {
        throw std::invalid_argument("valuation of zero");
    }
    Integer prime(p);
    Integer rest;
    const auto v = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t());
    return static_cast<long>(v);
}

long rational_valuation(const Rational& r, unsigned long p) {
    return integer_valuation(r.numerator(), p) - integer_valuation(r.denominator(), p);
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer ipow(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace stern
