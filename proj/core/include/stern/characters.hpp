#pragma once

#include "stern/cyclotomic.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace stern {

struct Generator {
    std::uint64_t residue = 0;
    std::uint64_t order = 0;
};

/// (Z/p^m)^* with a fixed generator convention and a full discrete-log table.
///
/// Odd p, or p^m = 4: a single generator, the smallest primitive root.
/// p = 2, m >= 3: the pair (-1, 5) of orders 2 and 2^(m-2).
class UnitGroup {
public:
    static constexpr std::uint64_t kDefaultMaxModulus = 200000;

    std::uint64_t p() const { return p_; }
    unsigned m() const { return m_; }
    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t order() const { return order_; }
    const std::vector<Generator>& generators() const { return generators_; }

    bool is_unit(std::int64_t a) const;
    /// Exponent vector of a over the generators; empty for non-units.
    std::vector<std::uint64_t> dlog(std::int64_t a) const;

    friend std::shared_ptr<const UnitGroup> build_unit_group(std::uint64_t p, unsigned m,
                                                             std::uint64_t max_modulus);

private:
    UnitGroup() = default;
    std::uint64_t reduce(std::int64_t a) const;

    std::uint64_t p_ = 0;
    unsigned m_ = 0;
    std::uint64_t modulus_ = 0;
    std::uint64_t order_ = 0;
    std::vector<Generator> generators_;
    // modulus_ * generators_.size() entries; row a is meaningful iff unit_[a].
    std::vector<std::uint32_t> dlog_;
    std::vector<bool> unit_;
};

/// Throws DomainError unless p is prime and p^m >= 3; ResourceError when
/// p^m exceeds max_modulus.
std::shared_ptr<const UnitGroup> build_unit_group(std::uint64_t p, unsigned m,
                                                  std::uint64_t max_modulus = UnitGroup::kDefaultMaxModulus);

enum class Parity { even, odd };

const char* to_string(Parity parity);

/// Stable serialisable identity of a character: (p, m, exponent vector)
/// under the fixed generator convention.
struct CharacterKey {
    std::uint64_t p = 0;
    unsigned m = 0;
    std::vector<std::uint64_t> exponents;

    friend auto operator<=>(const CharacterKey&, const CharacterKey&) = default;
    friend bool operator==(const CharacterKey&, const CharacterKey&) = default;

    /// "p^m[e1,e2]", e.g. "2^3[0,1]".
    std::string to_string() const;
    static CharacterKey parse(const std::string& text);
};

/// Dirichlet character modulo p^m. chi(generator_i) = zeta_{order_i}^{e_i};
/// every value lives in Q(zeta_N) with N = phi(p^m).
class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<std::uint64_t> exponents);

    const UnitGroup& group() const { return *group_; }
    const std::shared_ptr<const UnitGroup>& group_ptr() const { return group_; }
    std::uint64_t p() const { return group_->p(); }
    unsigned m() const { return group_->m(); }
    std::uint64_t modulus() const { return group_->modulus(); }
    /// N such that all values lie in Q(zeta_N).
    unsigned field_order() const { return field_order_; }
    const std::vector<std::uint64_t>& exponents() const { return exponents_; }
    CharacterKey key() const { return {p(), m(), exponents_}; }

    /// chi(a) = zeta_N^e; returns e, or -1 when gcd(a, p) > 1.
    long value_exponent(std::int64_t a) const;
    CyclotomicElement operator()(std::int64_t a) const;
    CyclotomicElement evaluate(std::int64_t a) const { return (*this)(a); }

    std::uint64_t conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == modulus(); }
    bool is_trivial() const { return conductor_ == 1; }
    Parity parity() const;
    /// Complex conjugate: the negated exponent vector.
    DirichletCharacter conjugate() const;

private:
    std::uint64_t compute_conductor() const;

    std::shared_ptr<const UnitGroup> group_;
    std::vector<std::uint64_t> exponents_;
    unsigned field_order_ = 1;
    std::vector<std::int32_t> value_exp_;
    std::uint64_t conductor_ = 1;
};

/// Throws std::invalid_argument when the exponent count does not match.
DirichletCharacter make_character(std::shared_ptr<const UnitGroup> group, std::vector<std::uint64_t> exponents);
DirichletCharacter make_character(const CharacterKey& key);

/// All phi(p^m) characters, exponent vectors in lexicographic order.
std::vector<DirichletCharacter> enumerate_characters(std::uint64_t p, unsigned m);
/// Characters of conductor exactly p^m, in the same order.
std::vector<DirichletCharacter> enumerate_primitive(std::uint64_t p, unsigned m);

/// The non-trivial character modulo 4.
DirichletCharacter chi_minus4();

}  // namespace stern
