#pragma once

#include "stern/characters.hpp"
#include "stern/cyclotomic.hpp"
#include "stern/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace stern {

/// Memo of B_k and B_{k,chi}. Entries are exact and never change once
/// written; concurrent readers are fine and a duplicate write of the same
/// key stores the same value, so last-writer-wins is safe.
class BernoulliCache {
public:
    using GeneralizedKey = std::pair<CharacterKey, unsigned>;

    static BernoulliCache& global();

    /// B_0 .. B_k, extending the table as needed.
    Rational bernoulli(unsigned k);

    std::optional<CyclotomicElement> find(const CharacterKey& chi, unsigned k) const;
    void store(const CharacterKey& chi, unsigned k, const CyclotomicElement& value);

    /// Sum_{a=1}^{f} chi(a) a^i for i = 0..up_to, reduced into Q(zeta_N).
    std::vector<CyclotomicElement> twisted_moments(const DirichletCharacter& chi, unsigned up_to);

    std::size_t generalized_size() const;
    /// Copy of every B_{k,chi} entry, ordered by key.
    std::map<GeneralizedKey, CyclotomicElement> generalized_snapshot() const;
    void clear();

private:
    mutable std::shared_mutex mutex_;
    std::vector<Rational> numbers_{Rational(1)};
    std::map<GeneralizedKey, CyclotomicElement> generalized_;
    std::map<CharacterKey, std::vector<CyclotomicElement>> moments_;
};

/// B_k from Sum_{j=0}^{k} C(k+1, j) B_j = 0, B_0 = 1 (so B_1 = -1/2).
Rational bernoulli_number(unsigned k);

/// B_k(x) = Sum_j C(k, j) B_j x^(k-j).
Rational bernoulli_polynomial(unsigned k, const Rational& x);

/// B_{k,chi} = f^(k-1) Sum_{a=1}^{f} chi(a) B_k(a/f) with f the modulus of chi.
/// Memoised in BernoulliCache::global().
CyclotomicElement generalized_bernoulli(unsigned k, const DirichletCharacter& chi);

/// Uncached evaluation of the closed form, term by term. Used to audit cache
/// entries.
CyclotomicElement generalized_bernoulli_uncached(unsigned k, const DirichletCharacter& chi);

/// Secant numbers: E_0 = 1, odd E_k = 0, Sum_{j even} C(k, j) E_j = 0.
Integer euler_number(unsigned k);

/// L(-k, chi) = -B_{k+1,chi} / (k+1). Throws ParityError unless
/// chi(-1) = (-1)^(k+1).
CyclotomicElement l_value(unsigned k, const DirichletCharacter& chi);

bool opposite_parity(unsigned k, const DirichletCharacter& chi);

/// The normalising factor 1 - chi(5) (p = 2, m >= 3) or 1 - chi(p+1)
/// (odd p, m >= 2). Throws UndefinedCaseError elsewhere or for a
/// non-primitive chi.
CyclotomicElement script_l_factor(const DirichletCharacter& chi);

/// script-L_{k,chi} = script_l_factor(chi) * L(-k, chi).
CyclotomicElement script_l(unsigned k, const DirichletCharacter& chi);

}  // namespace stern
