#include "stern/characters.hpp"

#include "stern/error.hpp"

#include <sstream>
#include <stdexcept>

namespace stern {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1U) {
            r = mulmod(r, base, m);
        }
        base = mulmod(base, base, m);
        e >>= 1U;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

std::uint64_t smallest_primitive_root(std::uint64_t modulus, std::uint64_t p, std::uint64_t order) {
    const auto factors = prime_factors(order);
    for (std::uint64_t g = 2; g < modulus; ++g) {
        if (g % p == 0) {
            continue;
        }
        bool ok = true;
        for (const auto q : factors) {
            if (powmod(g, order / q, modulus) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return g;
        }
    }
    throw std::logic_error("no primitive root found");
}

}  // namespace

std::shared_ptr<const UnitGroup> build_unit_group(std::uint64_t p, unsigned m, std::uint64_t max_modulus) {
    if (!is_prime(p)) {
        throw DomainError("build_unit_group: " + std::to_string(p) + " is not prime");
    }
    if (m == 0) {
        throw DomainError("build_unit_group: exponent must be positive");
    }
    std::uint64_t modulus = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (modulus > max_modulus / p) {
            throw ResourceError("build_unit_group: " + std::to_string(p) + "^" + std::to_string(m) +
                                " exceeds the table bound " + std::to_string(max_modulus));
        }
        modulus *= p;
    }
    if (modulus < 3) {
        throw DomainError("build_unit_group: modulus must be at least 3");
    }

    auto group = std::shared_ptr<UnitGroup>(new UnitGroup());
    group->p_ = p;
    group->m_ = m;
    group->modulus_ = modulus;
    group->order_ = modulus / p * (p - 1);
    if (p == 2 && m >= 3) {
        group->generators_ = {{modulus - 1, 2}, {5, modulus / 4}};
    } else {
        group->generators_ = {{smallest_primitive_root(modulus, p, group->order_), group->order_}};
    }

    const std::size_t ngens = group->generators_.size();
    group->dlog_.assign(modulus * ngens, 0);
    group->unit_.assign(modulus, false);
    if (ngens == 1) {
        const auto& g = group->generators_[0];
        std::uint64_t a = 1;
        for (std::uint64_t e = 0; e < g.order; ++e) {
            group->unit_[a] = true;
            group->dlog_[a] = static_cast<std::uint32_t>(e);
            a = mulmod(a, g.residue, modulus);
        }
    } else {
        const auto& g5 = group->generators_[1];
        for (std::uint64_t i = 0; i < 2; ++i) {
            std::uint64_t a = (i == 0) ? 1 : modulus - 1;
            for (std::uint64_t j = 0; j < g5.order; ++j) {
                group->unit_[a] = true;
                group->dlog_[a * 2] = static_cast<std::uint32_t>(i);
                group->dlog_[a * 2 + 1] = static_cast<std::uint32_t>(j);
                a = mulmod(a, 5, modulus);
            }
        }
    }
    return group;
}

std::uint64_t UnitGroup::reduce(std::int64_t a) const {
    const auto m = static_cast<std::int64_t>(modulus_);
    return static_cast<std::uint64_t>(((a % m) + m) % m);
}

bool UnitGroup::is_unit(std::int64_t a) const { return unit_[reduce(a)]; }

std::vector<std::uint64_t> UnitGroup::dlog(std::int64_t a) const {
    const auto r = reduce(a);
    if (!unit_[r]) {
        return {};
    }
    const std::size_t ngens = generators_.size();
    std::vector<std::uint64_t> out(ngens);
    for (std::size_t i = 0; i < ngens; ++i) {
        out[i] = dlog_[r * ngens + i];
    }
    return out;
}

const char* to_string(Parity parity) { return parity == Parity::even ? "even" : "odd"; }

std::string CharacterKey::to_string() const {
    std::ostringstream os;
    os << p << "^" << m << "[";
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        os << (i ? "," : "") << exponents[i];
    }
    os << "]";
    return os.str();
}

CharacterKey CharacterKey::parse(const std::string& text) {
    CharacterKey key;
    const auto caret = text.find('^');
    const auto open = text.find('[');
    const auto close = text.find(']');
    if (caret == std::string::npos || open == std::string::npos || close == std::string::npos || open < caret ||
        close < open) {
        throw std::invalid_argument("malformed character key '" + text + "'");
    }
    try {
        key.p = std::stoull(text.substr(0, caret));
        key.m = static_cast<unsigned>(std::stoul(text.substr(caret + 1, open - caret - 1)));
        std::string body = text.substr(open + 1, close - open - 1);
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            key.exponents.push_back(std::stoull(item));
        }
    } catch (const std::logic_error&) {
        throw std::invalid_argument("malformed character key '" + text + "'");
    }
    return key;
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<std::uint64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
    const auto& gens = group_->generators();
    if (exponents_.size() != gens.size()) {
        throw std::invalid_argument("character needs " + std::to_string(gens.size()) + " generator exponents");
    }
    field_order_ = static_cast<unsigned>(group_->order());
    std::vector<std::uint64_t> scale(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        exponents_[i] %= gens[i].order;
        scale[i] = field_order_ / gens[i].order;
    }
    const auto modulus = group_->modulus();
    value_exp_.assign(modulus, -1);
    for (std::uint64_t a = 0; a < modulus; ++a) {
        const auto logs = group_->dlog(static_cast<std::int64_t>(a));
        if (logs.empty()) {
            continue;
        }
        std::uint64_t e = 0;
        for (std::size_t i = 0; i < logs.size(); ++i) {
            e = (e + exponents_[i] * scale[i] % field_order_ * logs[i]) % field_order_;
        }
        value_exp_[a] = static_cast<std::int32_t>(e);
    }
    conductor_ = compute_conductor();
}

long DirichletCharacter::value_exponent(std::int64_t a) const {
    const auto m = static_cast<std::int64_t>(modulus());
    return value_exp_[static_cast<std::size_t>(((a % m) + m) % m)];
}

CyclotomicElement DirichletCharacter::operator()(std::int64_t a) const {
    const long e = value_exponent(a);
    if (e < 0) {
        return CyclotomicElement(Rational(0), field_order_);
    }
    return CyclotomicElement::zeta(field_order_, e);
}

Parity DirichletCharacter::parity() const { return value_exponent(-1) == 0 ? Parity::even : Parity::odd; }

DirichletCharacter DirichletCharacter::conjugate() const {
    std::vector<std::uint64_t> neg(exponents_.size());
    const auto& gens = group_->generators();
    for (std::size_t i = 0; i < neg.size(); ++i) {
        neg[i] = (gens[i].order - exponents_[i]) % gens[i].order;
    }
    return DirichletCharacter(group_, std::move(neg));
}

std::uint64_t DirichletCharacter::compute_conductor() const {
    const auto modulus = group_->modulus();
    std::uint64_t d = 1;
    for (unsigned j = 0; j < group_->m(); ++j, d *= group_->p()) {
        bool trivial_on_kernel = true;
        for (std::uint64_t a = 1; a < modulus; a += d) {
            if (value_exp_[a] > 0) {
                trivial_on_kernel = false;
                break;
            }
        }
        if (trivial_on_kernel) {
            return d;
        }
    }
    return modulus;
}

DirichletCharacter make_character(std::shared_ptr<const UnitGroup> group, std::vector<std::uint64_t> exponents) {
    return DirichletCharacter(std::move(group), std::move(exponents));
}

DirichletCharacter make_character(const CharacterKey& key) {
    return DirichletCharacter(build_unit_group(key.p, key.m), key.exponents);
}

std::vector<DirichletCharacter> enumerate_characters(std::uint64_t p, unsigned m) {
    auto group = build_unit_group(p, m);
    const auto& gens = group->generators();
    std::vector<DirichletCharacter> out;
    std::vector<std::uint64_t> exps(gens.size(), 0);
    while (true) {
        out.emplace_back(group, exps);
        std::size_t i = gens.size();
        while (i > 0) {
            --i;
            if (++exps[i] < gens[i].order) {
                break;
            }
            exps[i] = 0;
            if (i == 0) {
                return out;
            }
        }
    }
}

std::vector<DirichletCharacter> enumerate_primitive(std::uint64_t p, unsigned m) {
    std::vector<DirichletCharacter> out;
    for (auto& chi : enumerate_characters(p, m)) {
        if (chi.is_primitive()) {
            out.push_back(std::move(chi));
        }
    }
    return out;
}

DirichletCharacter chi_minus4() { return make_character(build_unit_group(2, 2), {1}); }

}  // namespace stern
