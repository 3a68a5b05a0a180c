#include "stern/cyclotomic.hpp"

#include "stern/error.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace stern {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
    while (!p.empty() && p.back().is_zero()) {
        p.pop_back();
    }
}

// Exact division of integer polynomials by a monic divisor.
IntPolynomial divide_monic(IntPolynomial num, const IntPolynomial& den) {
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) {
        return {};
    }
    IntPolynomial quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const Integer c = num[i];
        quot[i - dn] = c;
        if (c == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= dn; ++j) {
            num[i - dn + j] -= c * den[j];
        }
    }
    return quot;
}

std::vector<std::vector<Integer>> build_power_image(unsigned order, const IntPolynomial& modulus) {
    const std::size_t deg = modulus.size() - 1;
    std::vector<std::vector<Integer>> image(order, std::vector<Integer>(deg, 0));
    std::vector<Integer> cur(deg, 0);
    cur[0] = 1;
    for (unsigned e = 0; e < order; ++e) {
        image[e] = cur;
        // multiply by x and reduce with x^deg = -(m_0 + ... + m_{deg-1} x^{deg-1})
        const Integer top = cur[deg - 1];
        for (std::size_t i = deg - 1; i > 0; --i) {
            cur[i] = cur[i - 1] - top * modulus[i];
        }
        cur[0] = -top * modulus[0];
    }
    return image;
}

class FieldRegistry {
public:
    const CyclotomicField& get(unsigned order) {
        {
            std::lock_guard lock(mutex_);
            if (auto it = fields_.find(order); it != fields_.end()) {
                return *it->second;
            }
        }
        auto field = std::make_unique<CyclotomicField>();
        field->order = order;
        field->modulus = compute_polynomial(order);
        field->degree = static_cast<unsigned>(field->modulus.size() - 1);
        field->power_image = build_power_image(order, field->modulus);
        std::lock_guard lock(mutex_);
        auto [it, inserted] = fields_.try_emplace(order, std::move(field));
        return *it->second;
    }

private:
    IntPolynomial compute_polynomial(unsigned order) {
        IntPolynomial poly(order + 1, 0);
        poly[0] = -1;
        poly[order] = 1;
        for (unsigned d = 1; d < order; ++d) {
            if (order % d == 0) {
                poly = divide_monic(std::move(poly), get(d).modulus);
            }
        }
        return poly;
    }

    std::mutex mutex_;
    std::map<unsigned, std::unique_ptr<CyclotomicField>> fields_;
};

FieldRegistry& registry() {
    static FieldRegistry r;
    return r;
}

unsigned lcm_order(unsigned a, unsigned b) { return std::lcm(a, b); }

// Sum of c_e * zeta^e for a length-N bucket vector, reduced to the power basis.
template <typename T>
std::vector<Rational> reduce_buckets(const CyclotomicField& field, std::span<const T> buckets) {
    std::vector<Rational> out(field.degree);
    std::vector<Integer> int_acc;
    for (std::size_t e = 0; e < buckets.size(); ++e) {
        const auto& c = buckets[e];
        if constexpr (std::is_same_v<T, Rational>) {
            if (c.is_zero()) {
                continue;
            }
        } else {
            if (c == 0) {
                continue;
            }
        }
        const auto& row = field.power_image[e % field.order];
        for (unsigned i = 0; i < field.degree; ++i) {
            if (row[i] != 0) {
                out[i] += Rational(row[i]) * Rational(c);
            }
        }
    }
    return out;
}

// Polynomial division over Q; returns (quotient, remainder).
std::pair<RatPoly, RatPoly> divmod(RatPoly num, const RatPoly& den) {
    trim(num);
    if (num.size() < den.size()) {
        return {RatPoly{}, num};
    }
    const Rational lead_inv = den.back().inverse();
    RatPoly quot(num.size() - den.size() + 1);
    for (std::size_t i = num.size(); i-- >= den.size();) {
        if (num[i].is_zero()) {
            continue;
        }
        const Rational c = num[i] * lead_inv;
        const std::size_t shift = i - (den.size() - 1);
        quot[shift] = c;
        for (std::size_t j = 0; j < den.size(); ++j) {
            num[shift + j] -= c * den[j];
        }
    }
    num.resize(den.size() - 1);
    trim(num);
    trim(quot);
    return {quot, num};
}

RatPoly poly_sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b) {
    // a - q * b
    RatPoly out(std::max(a.size(), q.empty() || b.empty() ? 0 : q.size() + b.size() - 1));
    std::copy(a.begin(), a.end(), out.begin());
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] -= q[i] * b[j];
        }
    }
    trim(out);
    return out;
}

long mod_inverse_u(long a, long p) {
    long t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
    while (new_r != 0) {
        const long q = r / new_r;
        t = t - q * new_t;
        std::swap(t, new_t);
        r = r - q * new_r;
        std::swap(r, new_r);
    }
    return ((t % p) + p) % p;
}

using ModPoly = std::vector<long>;

void trim_mod(ModPoly& p) {
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

ModPoly mod_poly_rem(ModPoly a, const ModPoly& b, long p) {
    trim_mod(a);
    const long inv = mod_inverse_u(b.back(), p);
    while (a.size() >= b.size()) {
        const long c = a.back() * inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
            a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
        }
        trim_mod(a);
    }
    return a;
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            while (n % d == 0) {
                n /= d;
            }
            result -= result / d;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

IntPolynomial cyclotomic_polynomial(unsigned order) {
    if (order == 0) {
        throw std::invalid_argument("cyclotomic order must be positive");
    }
    return cyclotomic_field(order).modulus;
}

const CyclotomicField& cyclotomic_field(unsigned order) {
    if (order == 0) {
        throw std::invalid_argument("cyclotomic order must be positive");
    }
    return registry().get(order);
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

Valuation Valuation::parse(const std::string& text) {
    if (text == "inf") {
        return infinity();
    }
    return Valuation(std::stol(text));
}

CyclotomicElement::CyclotomicElement() : CyclotomicElement(Rational(0), 1) {}

CyclotomicElement::CyclotomicElement(const Rational& value, unsigned order)
    : order_(order), coeffs_(cyclotomic_field(order).degree) {
    coeffs_[0] = value;
}

CyclotomicElement CyclotomicElement::from_powers(unsigned order, std::span<const Rational> powers) {
    const auto& field = cyclotomic_field(order);
    if (powers.size() <= field.degree) {
        std::vector<Rational> c(field.degree);
        std::copy(powers.begin(), powers.end(), c.begin());
        return CyclotomicElement(order, std::move(c), 0);
    }
    std::vector<Rational> buckets(order);
    for (std::size_t i = 0; i < powers.size(); ++i) {
        buckets[i % order] += powers[i];
    }
    return CyclotomicElement(order, reduce_buckets<Rational>(field, buckets), 0);
}

CyclotomicElement CyclotomicElement::from_powers(unsigned order, std::span<const Integer> powers) {
    const auto& field = cyclotomic_field(order);
    std::vector<Integer> buckets(order, 0);
    for (std::size_t i = 0; i < powers.size(); ++i) {
        buckets[i % order] += powers[i];
    }
    return CyclotomicElement(order, reduce_buckets<Integer>(field, buckets), 0);
}

CyclotomicElement CyclotomicElement::from_basis(unsigned order, std::vector<Rational> coeffs) {
    if (coeffs.size() != cyclotomic_field(order).degree) {
        throw std::invalid_argument("coefficient count does not match phi(" + std::to_string(order) + ")");
    }
    return CyclotomicElement(order, std::move(coeffs), 0);
}

CyclotomicElement CyclotomicElement::zeta(unsigned order, long exponent) {
    const auto& field = cyclotomic_field(order);
    const long n = static_cast<long>(order);
    const auto e = static_cast<std::size_t>(((exponent % n) + n) % n);
    std::vector<Rational> c(field.degree);
    for (unsigned i = 0; i < field.degree; ++i) {
        c[i] = Rational(field.power_image[e][i]);
    }
    return CyclotomicElement(order, std::move(c), 0);
}

bool CyclotomicElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool CyclotomicElement::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& r) { return r.is_zero(); });
}

Rational CyclotomicElement::as_rational() const {
    if (!is_rational()) {
        throw std::domain_error("element is not rational: " + to_string());
    }
    return coeffs_[0];
}

CyclotomicElement CyclotomicElement::embed(unsigned target) const {
    if (target == order_) {
        return *this;
    }
    if (target % order_ != 0) {
        throw std::invalid_argument("embedding target must be a multiple of the order");
    }
    const unsigned step = target / order_;
    std::vector<Rational> buckets(target);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        buckets[i * step] = coeffs_[i];
    }
    return CyclotomicElement(target, reduce_buckets<Rational>(cyclotomic_field(target), buckets), 0);
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
    if (o.order_ != order_) {
        const unsigned l = lcm_order(order_, o.order_);
        *this = embed(l);
        return *this += o.embed(l);
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& o) { return *this += -o; }

CyclotomicElement CyclotomicElement::operator-() const {
    CyclotomicElement out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

CyclotomicElement& CyclotomicElement::operator*=(const Rational& r) {
    for (auto& c : coeffs_) {
        c *= r;
    }
    return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& o) {
    if (o.order_ != order_) {
        const unsigned l = lcm_order(order_, o.order_);
        *this = embed(l);
        return *this *= o.embed(l);
    }
    if (o.is_rational()) {
        return *this *= o.coeffs_[0];
    }
    if (is_rational()) {
        const Rational r = coeffs_[0];
        *this = o;
        return *this *= r;
    }
    std::vector<Rational> buckets(order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (!o.coeffs_[j].is_zero()) {
                buckets[(i + j) % order_] += coeffs_[i] * o.coeffs_[j];
            }
        }
    }
    coeffs_ = reduce_buckets<Rational>(cyclotomic_field(order_), buckets);
    return *this;
}

CyclotomicElement& CyclotomicElement::operator/=(const CyclotomicElement& o) {
    if (o.is_rational()) {
        if (o.coeffs_[0].is_zero()) {
            throw DivisionByZeroError("cyclotomic division by zero");
        }
        const CyclotomicElement scaled = *this * o.coeffs_[0].inverse();
        return *this = scaled.embed(lcm_order(order_, o.order_));
    }
    return *this *= o.inverse();
}

CyclotomicElement CyclotomicElement::inverse() const {
    if (is_zero()) {
        throw DivisionByZeroError("inverse of zero in Q(zeta_" + std::to_string(order_) + ")");
    }
    if (is_rational()) {
        return CyclotomicElement(coeffs_[0].inverse(), order_);
    }
    const auto& field = cyclotomic_field(order_);
    RatPoly r0(field.modulus.begin(), field.modulus.end());
    RatPoly r1(coeffs_.begin(), coeffs_.end());
    trim(r1);
    RatPoly s0;
    RatPoly s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s2 = poly_sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a non-zero constant because Phi_N is irreducible.
    const Rational scale = r0[0].inverse();
    for (auto& c : s0) {
        c *= scale;
    }
    return from_powers(order_, std::span<const Rational>(s0));
}

CyclotomicElement CyclotomicElement::pow(long e) const {
    if (e < 0) {
        return inverse().pow(-e);
    }
    CyclotomicElement result(Rational(1), order_);
    CyclotomicElement base = *this;
    auto k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1UL) {
            result *= base;
        }
        k >>= 1U;
        if (k > 0) {
            base *= base;
        }
    }
    return result;
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (a.order_ != b.order_) {
        const unsigned l = std::lcm(a.order_, b.order_);
        return a.embed(l).coeffs_ == b.embed(l).coeffs_;
    }
    return a.coeffs_ == b.coeffs_;
}

std::string CyclotomicElement::to_string() const {
    if (is_rational()) {
        return coeffs_[0].to_string();
    }
    std::ostringstream os;
    const std::string z = "z" + std::to_string(order_);
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != Rational(1)) {
            os << mag << "*";
        }
        os << z;
        if (i > 1) {
            os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CyclotomicElement& x) { return os << x.to_string(); }

Valuation p_content_valuation(const CyclotomicElement& x, unsigned long p) {
    Valuation best = Valuation::infinity();
    for (const auto& c : x.coeffs()) {
        if (c.is_zero()) {
            continue;
        }
        const Valuation v(rational_valuation(c, p));
        if (v < best) {
            best = v;
        }
    }
    return best;
}

CongruenceCheck congruent_mod(const CyclotomicElement& x, const CyclotomicElement& y, unsigned long p,
                              long n) {
    const Valuation margin = p_content_valuation(x - y, p);
    return {margin.at_least(n), margin};
}

bool divides_p_locally(const CyclotomicElement& d, const CyclotomicElement& x, unsigned long p) {
    if (d.is_zero()) {
        throw DivisionByZeroError("divides_p_locally: zero divisor");
    }
    return p_content_valuation(x / d, p).at_least(0);
}

bool is_p_unit(const CyclotomicElement& x, unsigned long p) {
    const Valuation v = p_content_valuation(x, p);
    if (v.is_infinite() || v.value() != 0) {
        return false;
    }
    const auto& field = cyclotomic_field(x.order());
    const long prime = static_cast<long>(p);
    ModPoly a(x.coeffs().size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Rational& c = x.coeffs()[i];
        const Integer num = c.numerator() % prime;
        const Integer den = c.denominator() % prime;
        const long n = (num.get_si() % prime + prime) % prime;
        const long d = (den.get_si() % prime + prime) % prime;
        a[i] = n * mod_inverse_u(d, prime) % prime;
    }
    ModPoly b(field.modulus.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        const Integer r = field.modulus[i] % prime;
        b[i] = (r.get_si() % prime + prime) % prime;
    }
    trim_mod(a);
    trim_mod(b);
    while (!a.empty()) {
        ModPoly r = mod_poly_rem(b, a, prime);
        b = std::move(a);
        a = std::move(r);
    }
    return b.size() == 1;
}

unsigned root_of_unity_order(const CyclotomicElement& x) {
    const unsigned bound = std::lcm(2U, x.order());
    const CyclotomicElement one(Rational(1), x.order());
    if (!(x.pow(bound) == one)) {
        throw NotRootOfUnityError("not a root of unity: " + x.to_string());
    }
    for (unsigned t = 1; t <= bound; ++t) {
        if (bound % t == 0 && x.pow(t) == one) {
            return t;
        }
    }
    return bound;
}

}  // namespace stern
