#include "stern/congruences.hpp"

#include "stern/bernoulli.hpp"
#include "stern/error.hpp"
#include "stern/power_sums.hpp"

#include <numeric>

namespace stern {

namespace {

std::uint64_t upow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        r *= b;
    }
    return r;
}

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(unsigned v) { return std::to_string(v); }

CyclotomicElement as_element(const Rational& r) { return CyclotomicElement(r); }

Rational pow_rational(std::int64_t base, unsigned e) { return Rational(static_cast<long>(base)).pow(e); }

void require(bool condition, const std::string& message) {
    if (!condition) {
        throw DomainError(message);
    }
}

void require_parity(unsigned k, const DirichletCharacter& chi) {
    if (!opposite_parity(k, chi)) {
        throw ParityError("k = " + std::to_string(k) + " does not have the opposite parity of " +
                          chi.key().to_string());
    }
}

CyclotomicElement one_in(const DirichletCharacter& chi) { return CyclotomicElement(Rational(1), chi.field_order()); }

// chi(a) a^e
CyclotomicElement twisted_power(const DirichletCharacter& chi, std::int64_t a, unsigned e) {
    return chi(a) * pow_rational(a, e);
}

}  // namespace

CongruenceVerdict verify_kummer_classical(std::uint64_t p, unsigned k, unsigned l, unsigned n) {
    require(is_prime(p) && p >= 5, "kummer: p must be a prime >= 5");
    require(n >= 1, "kummer: n must be positive");
    require(k >= 2 && l >= 2 && k % 2 == 0 && l % 2 == 0, "kummer: k and l must be even and >= 2");
    const std::uint64_t phi = upow(p, n) / p * (p - 1);
    require(k % phi == l % phi, "kummer: k and l must agree mod phi(p^n)");
    require(k % (p - 1) != 0, "kummer: (p-1) must not divide k");
    auto side = [p](unsigned s) {
        const Rational factor = Rational(1) - Rational(static_cast<long>(p)).pow(static_cast<long>(s) - 1);
        return factor * bernoulli_number(s) / Rational(static_cast<long>(s));
    };
    return make_verdict("kummer", {{"p", str(p)}, {"k", str(k)}, {"l", str(l)}, {"n", str(n)}}, p,
                        Relation::congruent, n, as_element(side(k)), as_element(side(l)));
}

CongruenceVerdict verify_envall(const DirichletCharacter& chi, std::uint64_t p, unsigned k, unsigned l,
                                unsigned n) {
    require(is_prime(p), "envall: p must be prime");
    require(!chi.is_trivial() && chi.p() != p, "envall: the conductor of chi must not be a power of p");
    require(k >= 1 && l >= 1 && n >= 1, "envall: k, l, n must be positive");
    const std::uint64_t phi = upow(p, n) / p * (p - 1);
    require(k % phi == l % phi, "envall: k and l must agree mod phi(p^n)");
    const CyclotomicElement chi_p = chi(static_cast<std::int64_t>(p));
    auto side = [&](unsigned s) {
        const CyclotomicElement factor =
            one_in(chi) - chi_p * Rational(static_cast<long>(p)).pow(static_cast<long>(s) - 1);
        return factor * generalized_bernoulli(s, chi) * Rational(1, static_cast<long>(s));
    };
    return make_verdict("1.1",
                        {{"chi", chi.key().to_string()}, {"p", str(p)}, {"k", str(k)}, {"l", str(l)}, {"n", str(n)}},
                        p, Relation::congruent, n, side(k), side(l));
}

CongruenceVerdict verify_euler_kummer(std::uint64_t p, unsigned k, unsigned l) {
    require(is_prime(p) && p % 2 == 1, "euler-kummer: p must be an odd prime");
    require(k % 2 == 0 && l % 2 == 0, "euler-kummer: k and l must be even");
    require(k % (p - 1) == l % (p - 1), "euler-kummer: k and l must agree mod p-1");
    return make_verdict("1.2", {{"p", str(p)}, {"k", str(k)}, {"l", str(l)}}, p, Relation::congruent, 1,
                        as_element(Rational(euler_number(k))), as_element(Rational(euler_number(l))));
}

CongruenceVerdict verify_stern(unsigned k, unsigned n, unsigned q) {
    require(k % 2 == 0, "stern: k must be even");
    require(n >= 1, "stern: n must be positive");
    require(q % 2 == 1, "stern: q must be odd");
    const unsigned shifted = k + (1U << n) * q;
    const Rational lhs(euler_number(shifted));
    const Rational rhs = Rational(euler_number(k)) + Rational(static_cast<long>(1UL << n));
    return make_verdict("1.3", {{"k", str(k)}, {"n", str(n)}, {"q", str(q)}}, 2, Relation::congruent, n + 1,
                        as_element(lhs), as_element(rhs));
}

CongruenceVerdict verify_stern_iff(unsigned k, unsigned l, unsigned n) {
    require(k % 2 == 0 && l % 2 == 0, "stern-iff: k and l must be even");
    require(n >= 1, "stern-iff: n must be positive");
    const bool expect = (k % (1U << n)) == (l % (1U << n));
    return make_verdict("1.3iff", {{"k", str(k)}, {"l", str(l)}, {"n", str(n)}}, 2,
                        expect ? Relation::congruent : Relation::incongruent, n,
                        as_element(Rational(euler_number(k))), as_element(Rational(euler_number(l))));
}

namespace {

void require_thm11(const DirichletCharacter& chi, unsigned k) {
    require(chi.p() == 2 && chi.m() >= 3, "thm 1.1: chi must have modulus 2^m with m >= 3");
    require(chi.is_primitive(), "thm 1.1: chi must be primitive");
    require_parity(k, chi);
}

}  // namespace

CongruenceVerdict verify_thm11(const DirichletCharacter& chi, unsigned k, unsigned n, unsigned q) {
    require_thm11(chi, k);
    require(n >= 1, "thm 1.1: n must be positive");
    require(q % 2 == 1, "thm 1.1: q must be odd");
    const unsigned d = k % 2;
    const CyclotomicElement lhs = script_l(k + (1U << n) * q, chi) - script_l(k, chi);
    const CyclotomicElement denom = one_in(chi) - chi.conjugate()(5);
    const CyclotomicElement rhs =
        script_l(d, chi) * Rational(Integer(Integer(1) << (n + 2))) / denom;
    auto v = make_verdict("1.4",
                          {{"chi", chi.key().to_string()}, {"k", str(k)}, {"n", str(n)}, {"q", str(q)}}, 2,
                          Relation::congruent, n + 3, lhs, rhs);
    v.notes.emplace_back("d", str(d));
    v.notes.emplace_back("rhs_valuation", p_content_valuation(rhs, 2).to_string());
    return v;
}

CongruenceVerdict verify_thm11_iff(const DirichletCharacter& chi, unsigned k, unsigned l, unsigned n) {
    require_thm11(chi, k);
    require_parity(l, chi);
    require(n >= 1, "thm 1.1: n must be positive");
    const bool expect = (k % (1U << n)) == (l % (1U << n));
    return make_verdict("1.5", {{"chi", chi.key().to_string()}, {"k", str(k)}, {"l", str(l)}, {"n", str(n)}}, 2,
                        expect ? Relation::congruent : Relation::incongruent, n + 2, script_l(k, chi),
                        script_l(l, chi));
}

std::vector<CongruenceVerdict> verify_thm11_iff(const DirichletCharacter& chi, std::span<const IffPoint> grid) {
    std::vector<CongruenceVerdict> out;
    out.reserve(grid.size());
    for (const auto& pt : grid) {
        out.push_back(verify_thm11_iff(chi, pt.k, pt.l, pt.n));
    }
    return out;
}

Thm12Branch thm12_branch(const DirichletCharacter& chi, unsigned k) {
    const auto modulus = static_cast<std::int64_t>(chi.modulus());
    const auto p = static_cast<std::int64_t>(chi.p());
    const CyclotomicElement one = one_in(chi);
    for (std::int64_t a = 1; a < modulus; ++a) {
        if (a % p == 0) {
            continue;
        }
        if (is_p_unit(one - twisted_power(chi, a, k + 1), chi.p())) {
            return Thm12Branch::unit;
        }
    }
    return Thm12Branch::non_unit;
}

namespace {

void require_thm12(const DirichletCharacter& chi, unsigned k) {
    require(chi.p() % 2 == 1, "thm 1.2: p must be odd");
    require(chi.is_primitive(), "thm 1.2: chi must be primitive");
    require_parity(k, chi);
}

void require_thm12_branch_ii(const DirichletCharacter& chi, unsigned k) {
    require(thm12_branch(chi, k) == Thm12Branch::non_unit,
            "thm 1.2 (ii): some 1 - chi(a) a^(k+1) is prime to p");
    require(chi.m() >= 2, "thm 1.2 (ii): needs m >= 2");
}

}  // namespace

CongruenceVerdict verify_thm12(const DirichletCharacter& chi, unsigned k, unsigned n, unsigned q) {
    require_thm12(chi, k);
    const std::uint64_t p = chi.p();
    require(n >= 1 && q >= 1, "thm 1.2: n and q must be positive");
    require(q % p != 0, "thm 1.2: p must not divide q");
    const auto phi_pn = static_cast<unsigned>(upow(p, n) / p * (p - 1));
    ParamList params{{"chi", chi.key().to_string()}, {"k", str(k)}, {"n", str(n)}, {"q", str(q)}};

    if (thm12_branch(chi, k) == Thm12Branch::unit) {
        auto v = make_verdict("1.6", std::move(params), p, Relation::congruent, n, l_value(k + phi_pn * q, chi),
                              l_value(k, chi));
        v.branch = "i";
        return v;
    }
    require(chi.m() >= 2, "thm 1.2 (ii): needs m >= 2");
    const unsigned d = k % static_cast<unsigned>(p - 1);
    const CyclotomicElement lhs = script_l(k + phi_pn * q, chi) - script_l(k, chi);
    const CyclotomicElement denom = one_in(chi) - chi.conjugate()(static_cast<std::int64_t>(p) + 1);
    const Rational scale = Rational(ipow(Integer(static_cast<unsigned long>(p)), n)) * Rational(static_cast<long>(q));
    const CyclotomicElement rhs = script_l(d, chi) * scale / denom;
    auto v = make_verdict("1.7", std::move(params), p, Relation::congruent, n, lhs, rhs);
    v.branch = "ii";
    v.notes.emplace_back("d", str(d));
    v.notes.emplace_back("holds_mod_p^(n+1)", v.observed_margin.at_least(n + 1) ? "true" : "false");
    v.notes.emplace_back("rhs_valuation", p_content_valuation(rhs, p).to_string());
    // The proof claims (1 - chi(p+1))^2 does not divide p; record what actually happens.
    const CyclotomicElement factor = one_in(chi) - chi(static_cast<std::int64_t>(p) + 1);
    v.notes.emplace_back("square_divides_p",
                         divides_p_locally(factor * factor, CyclotomicElement(Rational(static_cast<long>(p))), p)
                             ? "true"
                             : "false");
    return v;
}

CongruenceVerdict verify_thm12_iff(const DirichletCharacter& chi, unsigned k, unsigned h, unsigned n) {
    require_thm12(chi, k);
    require(n >= 1, "thm 1.2: n must be positive");
    require_thm12_branch_ii(chi, k);
    const std::uint64_t p = chi.p();
    const bool expect = h % upow(p, n - 1) == 0;
    auto v = make_verdict("1.8", {{"chi", chi.key().to_string()}, {"k", str(k)}, {"h", str(h)}, {"n", str(n)}}, p,
                          expect ? Relation::congruent : Relation::incongruent, n,
                          script_l(k + static_cast<unsigned>(p - 1) * h, chi), script_l(k, chi));
    v.branch = "ii";
    return v;
}

std::vector<CongruenceVerdict> verify_thm12_iff(const DirichletCharacter& chi, unsigned k,
                                                std::span<const unsigned> hs, unsigned n) {
    std::vector<CongruenceVerdict> out;
    out.reserve(hs.size());
    for (const unsigned h : hs) {
        out.push_back(verify_thm12_iff(chi, k, h, n));
    }
    return out;
}

CongruenceVerdict verify_voronoi(std::int64_t a, std::uint64_t p, unsigned k) {
    require(is_prime(p), "voronoi: p must be prime");
    require(a % static_cast<std::int64_t>(p) != 0, "voronoi: p must not divide a");
    require(k >= 2 && k % 2 == 0, "voronoi: k must be even and >= 2");
    const Rational lhs = (pow_rational(a, k) - Rational(1)) * bernoulli_number(k);
    const Rational rhs = Rational(static_cast<long>(k)) * pow_rational(a, k - 1) *
                         Rational(floor_weighted_sum_plain(k - 1, a, p, 1));
    return make_verdict("voronoi", {{"a", str(a)}, {"p", str(p)}, {"k", str(k)}}, p, Relation::congruent, 1,
                        as_element(lhs), as_element(rhs));
}

CongruenceVerdict verify_sun(unsigned k, unsigned n) {
    require(k % 2 == 0, "sun: k must be even");
    require(n >= 1, "sun: n must be positive");
    const Rational lhs = (pow_rational(3, k + 1) + Rational(1)) / Rational(4) * Rational(euler_number(k));
    const auto two_n = static_cast<std::int64_t>(1) << n;
    Integer sum = 0;
    for (std::int64_t j = 0; j < two_n; ++j) {
        const std::int64_t fl = floor_div(3 * j + 1, two_n);
        if (fl == 0) {
            continue;
        }
        const Integer term = ipow(Integer(static_cast<long>(2 * j + 1)), k) * Integer(static_cast<long>(fl));
        // (-1)^(j-1) is -1 for even j
        if (j % 2 == 0) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    const Rational rhs = pow_rational(3, k) / Rational(2) * Rational(sum);
    return make_verdict("3.1", {{"k", str(k)}, {"n", str(n)}}, 2, Relation::congruent, n, as_element(lhs),
                        as_element(rhs));
}

CongruenceVerdict verify_thm31(const DirichletCharacter& chi, std::int64_t a, unsigned k, unsigned n) {
    const std::uint64_t p = chi.p();
    require(a % static_cast<std::int64_t>(p) != 0, "thm 3.1: p must not divide a");
    require(n >= chi.m(), "thm 3.1: needs n >= m");
    require(p >= 5 || n >= 2, "thm 3.1: needs p >= 5, or n >= 2 when p is 2 or 3");
    require_parity(k, chi);
    const CyclotomicElement lhs = (one_in(chi) - twisted_power(chi, a, k + 1)) * l_value(k, chi);
    const CyclotomicElement rhs = twisted_power(chi, a, k) * floor_weighted_sum(k, a, p, n, chi);
    return make_verdict("3.2", {{"chi", chi.key().to_string()}, {"a", str(a)}, {"k", str(k)}, {"n", str(n)}}, p,
                        Relation::congruent, n, lhs, rhs);
}

CongruenceVerdict verify_lerch(std::int64_t a, std::uint64_t n) {
    require(n >= 2, "lerch: n must be at least 2");
    std::uint64_t p = 2;
    while (n % p != 0) {
        ++p;
    }
    unsigned e = 0;
    std::uint64_t rest = n;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    require(rest == 1, "lerch: n must be a prime power");
    require(std::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a), n) == 1, "lerch: gcd(a, n) must be 1");
    const auto phi = static_cast<unsigned>(n / p * (p - 1));
    const auto nn = static_cast<std::int64_t>(n);
    const Rational lhs = (pow_rational(a, phi) - Rational(1)) / Rational(static_cast<long>(n));
    Rational sum(0);
    for (std::int64_t j = 1; j <= nn; ++j) {
        if (j % static_cast<std::int64_t>(p) == 0) {
            continue;
        }
        const std::int64_t fl = floor_div(j * a, nn);
        if (fl != 0) {
            sum += Rational(static_cast<long>(fl), static_cast<long>(j));
        }
    }
    const Rational rhs = sum / Rational(static_cast<long>(a));
    return make_verdict("lerch", {{"a", str(a)}, {"n", str(n)}}, p, Relation::congruent, e, as_element(lhs),
                        as_element(rhs));
}

CongruenceVerdict check_nondivisibility(const DirichletCharacter& chi, unsigned d) {
    const std::uint64_t p = chi.p();
    // script_l_factor raises UndefinedCaseError for trivial or out-of-range chi.
    (void)script_l_factor(chi);
    require_parity(d, chi);
    if (p == 2) {
        require(d <= 1, "nondivisibility: d must lie in {0, 1} for p = 2");
    } else {
        require(d <= p - 2, "nondivisibility: d must lie in {0, ..., p-2}");
        require_thm12_branch_ii(chi, d);
    }
    const CyclotomicElement value = script_l(d, chi);
    const long bound = p == 2 ? 2 : 1;
    auto v = make_verdict("nondiv", {{"chi", chi.key().to_string()}, {"d", str(d)}}, p, Relation::incongruent, bound,
                          value, CyclotomicElement(Rational(0), chi.field_order()));
    return v;
}

std::uint64_t floor_count(unsigned m) {
    require(m >= 3 && m <= 6, "floor-count parity: m must lie in 3..6");
    const std::uint64_t lo1 = 1ULL << m;
    const std::uint64_t hi1 = 1ULL << (m + 1);
    const std::uint64_t lo2 = 3ULL << m;
    const std::uint64_t hi2 = 1ULL << (m + 2);
    std::uint64_t count = 0;
    for (std::uint64_t j = 0; 20 * j + 5 < hi2; ++j) {
        const std::uint64_t v = 20 * j + 5;
        if (v >= lo1 && v < hi1) {
            ++count;
        }
        if (v >= lo2 && v < hi2) {
            ++count;
        }
    }
    return count;
}

bool floor_count_parity(unsigned m) { return floor_count(m) % 2 == 1; }

CongruenceVerdict verify_floor_count_parity(unsigned m) {
    const std::uint64_t count = floor_count(m);
    auto v = make_verdict("floor-parity", {{"m", str(m)}}, 2, Relation::equal, 0,
                          as_element(Rational(static_cast<long>(count % 2))), as_element(Rational(1)));
    v.notes.emplace_back("count", str(count));
    return v;
}

const std::vector<std::string>& congruence_ids() {
    static const std::vector<std::string> ids{
        "kummer", "1.1", "1.2", "1.3", "1.3iff", "1.4", "1.5", "1.6", "1.7", "1.8", "voronoi", "3.1",
        "3.2", "lerch", "nondiv", "floor-parity", "2.1", "2.2", "2.3", "2.4"};
    return ids;
}

}  // namespace stern
