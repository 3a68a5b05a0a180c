#pragma once

#include "stern/characters.hpp"
#include "stern/verdict.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace stern {

/// Branch tag on verdicts that deliberately step outside a lemma's
/// hypotheses to show the exclusion is needed. Probe failures are data, not
/// failures of the lemma.
inline constexpr const char* kProbeBranch = "probe";

/// S_k(p^n, chi) == p^(n-m) S_k(p^m, chi) (mod p^n), n >= m, unless p = 2,
/// n = 1 and k odd. Any character mod p^m.
CongruenceVerdict verify_lemma21(const DirichletCharacter& chi, unsigned n, unsigned k);

/// (1 - chi(a) a^k) S_k(p^m, chi) == 0 (mod p^m); chi primitive, p not dividing a.
CongruenceVerdict verify_lemma22(const DirichletCharacter& chi, unsigned k, std::int64_t a);

/// S_k(p^n, chi) == 0 (mod p^n) for n >= m when some 1 - chi(a) a^k is prime to p.
CongruenceVerdict verify_corollary23(const DirichletCharacter& chi, unsigned n, unsigned k);

/// Odd p, 1 <= k < m: chi(p^(m-k) + 1) has order exactly p^k. Id "lemma2.3i".
CongruenceVerdict verify_lemma23_odd(const DirichletCharacter& chi, unsigned k);

/// p = 2, m >= 3: chi(5) != 1 and chi(5) has order 2^(m-2). Id "lemma2.3ii".
CongruenceVerdict verify_lemma23_two(const DirichletCharacter& chi);

/// S_k(p^n, chi) == 0 (mod p^(n-1)), chi primitive, n >= m.
CongruenceVerdict verify_lemma24(const DirichletCharacter& chi, unsigned n, unsigned k);

/// p = 2: S_k(2^n, chi) == 0 (mod 2^n) when m >= 3, or m = 2 and k even, or
/// m = 1 and k odd; n >= max(m, 2). Id "2.5".
CongruenceVerdict verify_lemma25(const DirichletCharacter& chi, unsigned n, unsigned k);

struct LemmaGrid {
    std::vector<std::uint64_t> primes{2, 3, 5};
    unsigned m_min = 1;
    unsigned m_max = 3;
    /// Moduli above this are left out of the grid.
    std::uint64_t max_modulus = 32;
    unsigned n_max = 4;
    unsigned k_max = 12;
    /// Residues for Lemma 2.2; empty means one full residue system 1..p^m.
    std::vector<std::int64_t> a;
    bool probe_excluded = true;
};

/// One verdict per in-hypothesis grid point of the named lemma ("2.1",
/// "2.2" which also covers the corollary (2.3), "2.3", "2.4" which also
/// covers (2.5)), followed by probe verdicts tagged kProbeBranch for the
/// excluded cases when grid.probe_excluded is set. Throws DomainError for an
/// unknown lemma id.
std::vector<CongruenceVerdict> check_lemma_sweep(std::string_view lemma, const LemmaGrid& grid);

}  // namespace stern
