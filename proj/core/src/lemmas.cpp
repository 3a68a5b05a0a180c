#include "stern/lemmas.hpp"

#include "stern/bernoulli.hpp"
#include "stern/error.hpp"
#include "stern/power_sums.hpp"

#include <string>

namespace stern {

namespace {

std::uint64_t upow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        r *= b;
    }
    return r;
}

void require(bool condition, const std::string& message) {
    if (!condition) {
        throw DomainError(message);
    }
}

CyclotomicElement zero_in(const DirichletCharacter& chi) { return CyclotomicElement(Rational(0), chi.field_order()); }
CyclotomicElement one_in(const DirichletCharacter& chi) { return CyclotomicElement(Rational(1), chi.field_order()); }

CyclotomicElement one_minus_twist(const DirichletCharacter& chi, std::int64_t a, unsigned k) {
    return one_in(chi) - chi(a) * Rational(static_cast<long>(a)).pow(k);
}

ParamList base_params(const DirichletCharacter& chi) { return {{"chi", chi.key().to_string()}}; }

CongruenceVerdict lemma21_raw(const DirichletCharacter& chi, unsigned n, unsigned k) {
    const std::uint64_t p = chi.p();
    const Rational scale = Rational(static_cast<long>(p)).pow(static_cast<long>(n) - static_cast<long>(chi.m()));
    auto params = base_params(chi);
    params.emplace_back("n", std::to_string(n));
    params.emplace_back("k", std::to_string(k));
    return make_verdict("2.1", std::move(params), p, Relation::congruent, n, power_sum(k, upow(p, n), chi),
                        power_sum(k, chi.modulus(), chi) * scale);
}

CongruenceVerdict lemma22_raw(const DirichletCharacter& chi, unsigned k, std::int64_t a) {
    auto params = base_params(chi);
    params.emplace_back("k", std::to_string(k));
    params.emplace_back("a", std::to_string(a));
    return make_verdict("2.2", std::move(params), chi.p(), Relation::congruent, chi.m(),
                        one_minus_twist(chi, a, k) * power_sum(k, chi.modulus(), chi), zero_in(chi));
}

bool has_unit_twist(const DirichletCharacter& chi, unsigned k) {
    const auto modulus = static_cast<std::int64_t>(chi.modulus());
    const auto p = static_cast<std::int64_t>(chi.p());
    for (std::int64_t a = 1; a < modulus; ++a) {
        if (a % p != 0 && is_p_unit(one_minus_twist(chi, a, k), chi.p())) {
            return true;
        }
    }
    return false;
}

CongruenceVerdict corollary23_raw(const DirichletCharacter& chi, unsigned n, unsigned k) {
    auto params = base_params(chi);
    params.emplace_back("n", std::to_string(n));
    params.emplace_back("k", std::to_string(k));
    return make_verdict("2.3", std::move(params), chi.p(), Relation::congruent, n,
                        power_sum(k, upow(chi.p(), n), chi), zero_in(chi));
}

CongruenceVerdict lemma23_odd_raw(const DirichletCharacter& chi, unsigned k) {
    const std::uint64_t p = chi.p();
    const auto arg = static_cast<std::int64_t>(upow(p, chi.m() - k) + 1);
    const unsigned order = root_of_unity_order(chi(arg));
    auto params = base_params(chi);
    params.emplace_back("k", std::to_string(k));
    return make_verdict("lemma2.3i", std::move(params), p, Relation::equal, 0,
                        CyclotomicElement(Rational(static_cast<long>(order))),
                        CyclotomicElement(Rational(static_cast<long>(upow(p, k)))));
}

CongruenceVerdict lemma23_two_raw(const DirichletCharacter& chi) {
    const unsigned order = root_of_unity_order(chi(5));
    return make_verdict("lemma2.3ii", base_params(chi), 2, Relation::equal, 0,
                        CyclotomicElement(Rational(static_cast<long>(order))),
                        CyclotomicElement(Rational(static_cast<long>(upow(2, chi.m() - 2)))));
}

CongruenceVerdict power_sum_zero(const char* id, const DirichletCharacter& chi, unsigned n, unsigned k,
                                 long required) {
    auto params = base_params(chi);
    params.emplace_back("n", std::to_string(n));
    params.emplace_back("k", std::to_string(k));
    return make_verdict(id, std::move(params), chi.p(), Relation::congruent, required,
                        power_sum(k, upow(chi.p(), n), chi), zero_in(chi));
}

bool lemma25_case(const DirichletCharacter& chi, unsigned k) {
    const unsigned m = chi.m();
    return m >= 3 || (m == 2 && k % 2 == 0) || (m == 1 && k % 2 == 1);
}

CongruenceVerdict as_probe(CongruenceVerdict v, const std::string& excluded) {
    v.branch = kProbeBranch;
    v.notes.emplace_back("excluded", excluded);
    return v;
}

}  // namespace

CongruenceVerdict verify_lemma21(const DirichletCharacter& chi, unsigned n, unsigned k) {
    require(n >= chi.m(), "lemma 2.1: needs n >= m");
    require(!(chi.p() == 2 && n == 1 && k % 2 == 1), "lemma 2.1: excluded case p = 2, n = 1, k odd");
    return lemma21_raw(chi, n, k);
}

CongruenceVerdict verify_lemma22(const DirichletCharacter& chi, unsigned k, std::int64_t a) {
    require(chi.is_primitive(), "lemma 2.2: chi must be primitive");
    require(a % static_cast<std::int64_t>(chi.p()) != 0, "lemma 2.2: a must be prime to p");
    return lemma22_raw(chi, k, a);
}

CongruenceVerdict verify_corollary23(const DirichletCharacter& chi, unsigned n, unsigned k) {
    require(chi.is_primitive(), "corollary 2.3: chi must be primitive");
    require(n >= chi.m(), "corollary 2.3: needs n >= m");
    require(has_unit_twist(chi, k), "corollary 2.3: no 1 - chi(a) a^k is prime to p");
    return corollary23_raw(chi, n, k);
}

CongruenceVerdict verify_lemma23_odd(const DirichletCharacter& chi, unsigned k) {
    require(chi.p() % 2 == 1, "lemma 2.3 (i): p must be odd");
    require(chi.is_primitive(), "lemma 2.3 (i): chi must have conductor p^m");
    require(k >= 1 && k < chi.m(), "lemma 2.3 (i): needs m > k >= 1");
    return lemma23_odd_raw(chi, k);
}

CongruenceVerdict verify_lemma23_two(const DirichletCharacter& chi) {
    require(chi.p() == 2 && chi.m() >= 3, "lemma 2.3 (ii): needs p = 2 and m >= 3");
    require(chi.is_primitive(), "lemma 2.3 (ii): chi must have conductor 2^m");
    return lemma23_two_raw(chi);
}

CongruenceVerdict verify_lemma24(const DirichletCharacter& chi, unsigned n, unsigned k) {
    require(chi.is_primitive(), "lemma 2.4: chi must be primitive");
    require(n >= chi.m(), "lemma 2.4: needs n >= m");
    return power_sum_zero("2.4", chi, n, k, static_cast<long>(n) - 1);
}

CongruenceVerdict verify_lemma25(const DirichletCharacter& chi, unsigned n, unsigned k) {
    require(chi.p() == 2, "lemma 2.4 (2.5): p must be 2");
    require(chi.is_primitive(), "lemma 2.4 (2.5): chi must be primitive");
    require(lemma25_case(chi, k), "lemma 2.4 (2.5): needs m >= 3, m = 2 with k even, or m = 1 with k odd");
    require(n >= chi.m() && n >= 2, "lemma 2.4 (2.5): needs n >= max(m, 2)");
    return power_sum_zero("2.5", chi, n, k, n);
}

std::vector<CongruenceVerdict> check_lemma_sweep(std::string_view lemma, const LemmaGrid& grid) {
    if (lemma != "2.1" && lemma != "2.2" && lemma != "2.3" && lemma != "2.4") {
        throw DomainError("unknown lemma id '" + std::string(lemma) + "'");
    }
    std::vector<CongruenceVerdict> out;
    std::vector<CongruenceVerdict> probes;
    for (const auto p : grid.primes) {
        for (unsigned m = grid.m_min; m <= grid.m_max; ++m) {
            const std::uint64_t modulus = upow(p, m);
            if (modulus < 3 || modulus > grid.max_modulus) {
                continue;
            }
            for (const auto& chi : enumerate_characters(p, m)) {
                if (lemma == "2.1") {
                    for (unsigned n = m; n <= grid.n_max; ++n) {
                        for (unsigned k = 0; k <= grid.k_max; ++k) {
                            if (!(p == 2 && n == 1 && k % 2 == 1)) {
                                out.push_back(lemma21_raw(chi, n, k));
                            }
                        }
                    }
                    if (grid.probe_excluded && p == 2) {
                        for (unsigned k = 1; k <= grid.k_max; k += 2) {
                            probes.push_back(as_probe(lemma21_raw(chi, 1, k), "p=2,n=1,k odd"));
                        }
                    }
                } else if (lemma == "2.2") {
                    std::vector<std::int64_t> residues = grid.a;
                    if (residues.empty()) {
                        for (std::uint64_t a = 1; a <= modulus; ++a) {
                            residues.push_back(static_cast<std::int64_t>(a));
                        }
                    }
                    for (unsigned k = 0; k <= grid.k_max; ++k) {
                        for (const auto a : residues) {
                            const bool coprime = a % static_cast<std::int64_t>(p) != 0;
                            if (chi.is_primitive() && coprime) {
                                out.push_back(lemma22_raw(chi, k, a));
                            } else if (grid.probe_excluded && chi.is_primitive()) {
                                probes.push_back(as_probe(lemma22_raw(chi, k, a), "p divides a"));
                            }
                        }
                        if (!chi.is_primitive()) {
                            continue;
                        }
                        const bool unit = has_unit_twist(chi, k);
                        for (unsigned n = m; n <= grid.n_max; ++n) {
                            if (unit) {
                                out.push_back(corollary23_raw(chi, n, k));
                            } else if (grid.probe_excluded) {
                                probes.push_back(as_probe(corollary23_raw(chi, n, k), "no unit 1-chi(a)a^k"));
                            }
                        }
                    }
                } else if (lemma == "2.3") {
                    if (p % 2 == 1 && m >= 2) {
                        for (unsigned k = 1; k < m; ++k) {
                            if (chi.is_primitive()) {
                                out.push_back(lemma23_odd_raw(chi, k));
                            } else if (grid.probe_excluded) {
                                probes.push_back(as_probe(lemma23_odd_raw(chi, k), "imprimitive chi"));
                            }
                        }
                    } else if (p == 2 && m >= 3) {
                        if (chi.is_primitive()) {
                            out.push_back(lemma23_two_raw(chi));
                        } else if (grid.probe_excluded) {
                            probes.push_back(as_probe(lemma23_two_raw(chi), "imprimitive chi"));
                        }
                    }
                } else {  // 2.4 and (2.5)
                    if (!chi.is_primitive()) {
                        continue;
                    }
                    for (unsigned n = m; n <= grid.n_max; ++n) {
                        for (unsigned k = 0; k <= grid.k_max; ++k) {
                            out.push_back(power_sum_zero("2.4", chi, n, k, static_cast<long>(n) - 1));
                            if (p != 2 || n < 2) {
                                continue;
                            }
                            if (lemma25_case(chi, k)) {
                                out.push_back(power_sum_zero("2.5", chi, n, k, n));
                            } else if (grid.probe_excluded) {
                                probes.push_back(
                                    as_probe(power_sum_zero("2.5", chi, n, k, n), "p=2,m=2,k odd"));
                            }
                        }
                    }
                }
            }
        }
    }
    out.insert(out.end(), std::make_move_iterator(probes.begin()), std::make_move_iterator(probes.end()));
    return out;
}

}  // namespace stern
