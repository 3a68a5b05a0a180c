#pragma once

#include "stern/characters.hpp"
#include "stern/verdict.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace stern {

// Every verifier checks its theorem's hypotheses first and throws
// DomainError (or ParityError / UndefinedCaseError) when they fail; a
// verdict is only produced for in-hypothesis parameters. Verdicts carry the
// observed valuation margin even when they hold.

/// (1 - p^(k-1)) B_k / k == (1 - p^(l-1)) B_l / l (mod p^n); p >= 5,
/// k, l even >= 2, k == l mod phi(p^n), (p-1) does not divide k.
CongruenceVerdict verify_kummer_classical(std::uint64_t p, unsigned k, unsigned l, unsigned n);

/// (1 - chi(p) p^(k-1)) B_{k,chi} / k == (same at l) (mod p^n) for chi whose
/// conductor is a power of a prime other than p; k == l mod phi(p^n).
CongruenceVerdict verify_envall(const DirichletCharacter& chi, std::uint64_t p, unsigned k, unsigned l, unsigned n);

/// E_k == E_l (mod p) for odd p, even k, l with k == l mod (p-1).
CongruenceVerdict verify_euler_kummer(std::uint64_t p, unsigned k, unsigned l);

/// E_{k + 2^n q} == E_k + 2^n (mod 2^(n+1)) for even k and odd q.
CongruenceVerdict verify_stern(unsigned k, unsigned n, unsigned q);

/// One point of the iff form: E_k == E_l (mod 2^n) is asserted when
/// k == l (mod 2^n) and refuted otherwise.
CongruenceVerdict verify_stern_iff(unsigned k, unsigned l, unsigned n);

/// script-L_{k+2^n q} - script-L_k == 2^(n+2) / (1 - conj(chi)(5)) * script-L_d
/// (mod 2^(n+3)) for primitive chi mod 2^m, m >= 3.
CongruenceVerdict verify_thm11(const DirichletCharacter& chi, unsigned k, unsigned n, unsigned q);

struct IffPoint {
    unsigned k = 0;
    unsigned l = 0;
    unsigned n = 1;
};

/// script-L_k == script-L_l (mod 2^(n+2)) iff k == l (mod 2^n), one point.
CongruenceVerdict verify_thm11_iff(const DirichletCharacter& chi, unsigned k, unsigned l, unsigned n);
std::vector<CongruenceVerdict> verify_thm11_iff(const DirichletCharacter& chi, std::span<const IffPoint> grid);

enum class Thm12Branch { unit, non_unit };

/// Branch (i) when some a prime to p makes 1 - chi(a) a^(k+1) a unit at p,
/// searched over a full reduced residue system mod p^m; branch (ii) otherwise.
Thm12Branch thm12_branch(const DirichletCharacter& chi, unsigned k);

/// Odd p, primitive chi mod p^m, p does not divide q, k of opposite parity.
/// Branch (i) checks L(-k - phi(p^n) q) == L(-k) (mod p^n) as id "1.6".
/// Branch (ii) (needs m >= 2) checks the script-L relation with the
/// p^n q / (1 - conj(chi)(p+1)) script-L_d term as id "1.7", and records in
/// its notes whether the relation also holds mod p^(n+1).
CongruenceVerdict verify_thm12(const DirichletCharacter& chi, unsigned k, unsigned n, unsigned q);

/// script-L_{k+(p-1)h} == script-L_k (mod p^n) iff h == 0 (mod p^(n-1)),
/// one point. Needs the branch (ii) hypotheses.
CongruenceVerdict verify_thm12_iff(const DirichletCharacter& chi, unsigned k, unsigned h, unsigned n);
std::vector<CongruenceVerdict> verify_thm12_iff(const DirichletCharacter& chi, unsigned k,
                                                std::span<const unsigned> hs, unsigned n);

/// (a^k - 1) B_k == k a^(k-1) Sum_{j<p} j^(k-1) floor(j a / p) (mod p).
CongruenceVerdict verify_voronoi(std::int64_t a, std::uint64_t p, unsigned k);

/// (3^(k+1) + 1)/4 E_k == 3^k / 2 * Sum_{j<2^n} (-1)^(j-1) (2j+1)^k floor((3j+1)/2^n) (mod 2^n).
CongruenceVerdict verify_sun(unsigned k, unsigned n);

/// (1 - chi(a) a^(k+1)) L(-k, chi) == chi(a) a^k Sum_{j<p^n} chi(j) j^k floor(j a / p^n) (mod p^n).
/// Needs p not dividing a, n >= m, opposite parity, and p >= 5 or n >= 2.
CongruenceVerdict verify_thm31(const DirichletCharacter& chi, std::int64_t a, unsigned k, unsigned n);

/// (a^phi(n) - 1)/n == (1/a) Sum_{j<=n, (j,n)=1} (1/j) floor(j a / n) (mod n)
/// for n a prime power >= 2 and gcd(a, n) = 1.
CongruenceVerdict verify_lerch(std::int64_t a, std::uint64_t n);

/// script-L_d is not divisible by p (odd p), or by 4 (p = 2). The verdict
/// uses Relation::incongruent so it holds exactly when the claim does.
CongruenceVerdict check_nondivisibility(const DirichletCharacter& chi, unsigned d);

/// |{j : 2^m <= 20j+5 < 2^(m+1)}| + |{j : 3*2^m <= 20j+5 < 2^(m+2)}| is odd.
/// Throws DomainError outside 3 <= m <= 6.
bool floor_count_parity(unsigned m);
std::uint64_t floor_count(unsigned m);
CongruenceVerdict verify_floor_count_parity(unsigned m);

/// Identifiers of every registered verifier, in a fixed order.
const std::vector<std::string>& congruence_ids();

}  // namespace stern
