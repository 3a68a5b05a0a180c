#include "stern/bernoulli.hpp"

#include "stern/error.hpp"

#include <mutex>

namespace stern {

BernoulliCache& BernoulliCache::global() {
    static BernoulliCache cache;
    return cache;
}

Rational BernoulliCache::bernoulli(unsigned k) {
    {
        std::shared_lock lock(mutex_);
        if (k < numbers_.size()) {
            return numbers_[k];
        }
    }
    std::unique_lock lock(mutex_);
    while (numbers_.size() <= k) {
        const auto n = static_cast<unsigned long>(numbers_.size());
        // Sum_{j=0}^{n} C(n+1, j) B_j = 0  =>  B_n = -(Sum_{j<n} C(n+1, j) B_j) / (n+1)
        Rational acc(0);
        for (unsigned long j = 0; j < n; ++j) {
            if (j > 1 && (j & 1UL)) {
                continue;
            }
            acc += Rational(binomial(n + 1, j)) * numbers_[j];
        }
        numbers_.push_back(-acc / Rational(static_cast<long>(n + 1)));
    }
    return numbers_[k];
}

std::optional<CyclotomicElement> BernoulliCache::find(const CharacterKey& chi, unsigned k) const {
    std::shared_lock lock(mutex_);
    if (auto it = generalized_.find({chi, k}); it != generalized_.end()) {
        return it->second;
    }
    return std::nullopt;
}

void BernoulliCache::store(const CharacterKey& chi, unsigned k, const CyclotomicElement& value) {
    std::unique_lock lock(mutex_);
    generalized_.insert_or_assign({chi, k}, value);
}

std::vector<CyclotomicElement> BernoulliCache::twisted_moments(const DirichletCharacter& chi, unsigned up_to) {
    const CharacterKey key = chi.key();
    {
        std::shared_lock lock(mutex_);
        if (auto it = moments_.find(key); it != moments_.end() && it->second.size() > up_to) {
            return {it->second.begin(), it->second.begin() + up_to + 1};
        }
    }
    const unsigned order = chi.field_order();
    const auto f = static_cast<std::int64_t>(chi.modulus());
    std::vector<Integer> powers(static_cast<std::size_t>(f) + 1, 1);
    std::vector<CyclotomicElement> moments;
    moments.reserve(up_to + 1);
    std::vector<Integer> buckets(order);
    for (unsigned i = 0; i <= up_to; ++i) {
        std::fill(buckets.begin(), buckets.end(), 0);
        for (std::int64_t a = 1; a <= f; ++a) {
            const long e = chi.value_exponent(a);
            if (e >= 0) {
                buckets[static_cast<std::size_t>(e)] += powers[static_cast<std::size_t>(a)];
            }
            powers[static_cast<std::size_t>(a)] *= a;
        }
        moments.push_back(CyclotomicElement::from_powers(order, std::span<const Integer>(buckets)));
    }
    std::unique_lock lock(mutex_);
    auto& slot = moments_[key];
    if (slot.size() < moments.size()) {
        slot = moments;
    }
    return moments;
}

std::size_t BernoulliCache::generalized_size() const {
    std::shared_lock lock(mutex_);
    return generalized_.size();
}

std::map<BernoulliCache::GeneralizedKey, CyclotomicElement> BernoulliCache::generalized_snapshot() const {
    std::shared_lock lock(mutex_);
    return generalized_;
}

void BernoulliCache::clear() {
    std::unique_lock lock(mutex_);
    generalized_.clear();
    moments_.clear();
}

Rational bernoulli_number(unsigned k) { return BernoulliCache::global().bernoulli(k); }

Rational bernoulli_polynomial(unsigned k, const Rational& x) {
    Rational acc(0);
    Rational xp(1);  // x^(k-j), built from j = k downward
    for (unsigned j = k + 1; j-- > 0;) {
        acc += Rational(binomial(k, j)) * bernoulli_number(j) * xp;
        xp *= x;
    }
    return acc;
}

CyclotomicElement generalized_bernoulli(unsigned k, const DirichletCharacter& chi) {
    auto& cache = BernoulliCache::global();
    const CharacterKey key = chi.key();
    if (auto hit = cache.find(key, k)) {
        return *hit;
    }
    const auto moments = cache.twisted_moments(chi, k);
    const Integer f(static_cast<unsigned long>(chi.modulus()));
    CyclotomicElement acc(Rational(0), chi.field_order());
    // B_{k,chi} = Sum_j C(k, j) B_j f^(j-1) T_{k-j}
    Rational fpow = Rational(1) / Rational(f);
    for (unsigned j = 0; j <= k; ++j) {
        const Rational bj = bernoulli_number(j);
        if (!bj.is_zero()) {
            acc += moments[k - j] * (Rational(binomial(k, j)) * bj * fpow);
        }
        fpow *= Rational(f);
    }
    cache.store(key, k, acc);
    return acc;
}

CyclotomicElement generalized_bernoulli_uncached(unsigned k, const DirichletCharacter& chi) {
    const auto f = static_cast<long>(chi.modulus());
    CyclotomicElement acc(Rational(0), chi.field_order());
    for (long a = 1; a <= f; ++a) {
        const long e = chi.value_exponent(a);
        if (e < 0) {
            continue;
        }
        acc += CyclotomicElement::zeta(chi.field_order(), e) * bernoulli_polynomial(k, Rational(a, f));
    }
    return acc * Rational(f).pow(static_cast<long>(k) - 1);
}

Integer euler_number(unsigned k) {
    static std::shared_mutex mutex;
    static std::vector<Integer> table{Integer(1)};
    if (k & 1U) {
        return 0;
    }
    {
        std::shared_lock lock(mutex);
        if (k / 2 < table.size()) {
            return table[k / 2];
        }
    }
    std::unique_lock lock(mutex);
    while (table.size() <= k / 2) {
        const unsigned long n = 2 * table.size();
        Integer acc = 0;
        for (unsigned long j = 0; j < n; j += 2) {
            acc += binomial(n, j) * table[j / 2];
        }
        table.push_back(-acc);
    }
    return table[k / 2];
}

bool opposite_parity(unsigned k, const DirichletCharacter& chi) {
    const bool chi_odd = chi.parity() == Parity::odd;
    const bool k_odd = (k & 1U) != 0;
    return chi_odd != k_odd;
}

CyclotomicElement l_value(unsigned k, const DirichletCharacter& chi) {
    if (!opposite_parity(k, chi)) {
        throw ParityError("L(-" + std::to_string(k) + ", chi) needs k of opposite parity to " +
                          chi.key().to_string() + " (" + to_string(chi.parity()) + ")");
    }
    return generalized_bernoulli(k + 1, chi) * Rational(-1, static_cast<long>(k) + 1);
}

CyclotomicElement script_l_factor(const DirichletCharacter& chi) {
    const auto p = chi.p();
    const auto m = chi.m();
    if (!chi.is_primitive()) {
        throw UndefinedCaseError("script-L needs a primitive character; " + chi.key().to_string() +
                                 " has conductor " + std::to_string(chi.conductor()));
    }
    const CyclotomicElement one(Rational(1), chi.field_order());
    if (p == 2 && m >= 3) {
        return one - chi(5);
    }
    if (p >= 3 && m >= 2) {
        return one - chi(static_cast<std::int64_t>(p) + 1);
    }
    throw UndefinedCaseError("script-L is undefined for modulus " + std::to_string(p) + "^" + std::to_string(m));
}

CyclotomicElement script_l(unsigned k, const DirichletCharacter& chi) {
    const CyclotomicElement factor = script_l_factor(chi);
    return factor * l_value(k, chi);
}

}  // namespace stern
