#pragma once

#include "stern/cyclotomic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stern {

/// What the verdict asserts about lhs - rhs.
///
/// congruent:   holds iff margin >= required  (the usual "mod p^n" claim)
/// incongruent: holds iff margin <  required  (non-divisibility, and the
///              "only if" half of iff scans)
/// equal:       holds iff lhs == rhs exactly (margin is +inf)
enum class Relation { congruent, incongruent, equal };

const char* to_string(Relation r);
Relation parse_relation(const std::string& text);

using ParamList = std::vector<std::pair<std::string, std::string>>;

struct CongruenceVerdict {
    std::string id;
    ParamList params;
    std::uint64_t prime = 0;
    Relation relation = Relation::congruent;
    long required_modulus_exponent = 0;
    Valuation observed_margin;
    bool holds = false;
    CyclotomicElement lhs;
    CyclotomicElement rhs;
    std::optional<std::string> branch;
    /// Extra observed facts (e.g. the valuation of a right-hand side).
    ParamList notes;

    /// "id{k=v,...}", unique within a sweep.
    std::string key() const;
    std::string param(const std::string& name) const;
};

bool operator==(const CongruenceVerdict& a, const CongruenceVerdict& b);

/// Builds a verdict, computing margin and holds from lhs, rhs and relation.
CongruenceVerdict make_verdict(std::string id, ParamList params, std::uint64_t prime, Relation relation,
                               long required, CyclotomicElement lhs, CyclotomicElement rhs);

}  // namespace stern
