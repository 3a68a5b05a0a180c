#include "stern/verdict.hpp"

#include <stdexcept>

namespace stern {

const char* to_string(Relation r) {
    switch (r) {
        case Relation::congruent: return "congruent";
        case Relation::incongruent: return "incongruent";
        case Relation::equal: return "equal";
    }
    return "?";
}

Relation parse_relation(const std::string& text) {
    if (text == "congruent") return Relation::congruent;
    if (text == "incongruent") return Relation::incongruent;
    if (text == "equal") return Relation::equal;
    throw std::invalid_argument("unknown relation '" + text + "'");
}

std::string CongruenceVerdict::key() const {
    std::string out = id + "{";
    for (std::size_t i = 0; i < params.size(); ++i) {
        out += (i ? "," : "") + params[i].first + "=" + params[i].second;
    }
    return out + "}";
}

std::string CongruenceVerdict::param(const std::string& name) const {
    for (const auto& [k, v] : params) {
        if (k == name) {
            return v;
        }
    }
    return {};
}

bool operator==(const CongruenceVerdict& a, const CongruenceVerdict& b) {
    return a.id == b.id && a.params == b.params && a.prime == b.prime && a.relation == b.relation &&
           a.required_modulus_exponent == b.required_modulus_exponent && a.observed_margin == b.observed_margin &&
           a.holds == b.holds && a.lhs == b.lhs && a.rhs == b.rhs && a.branch == b.branch && a.notes == b.notes;
}

CongruenceVerdict make_verdict(std::string id, ParamList params, std::uint64_t prime, Relation relation,
                               long required, CyclotomicElement lhs, CyclotomicElement rhs) {
    CongruenceVerdict v;
    v.id = std::move(id);
    v.params = std::move(params);
    v.prime = prime;
    v.relation = relation;
    v.required_modulus_exponent = required;
    v.observed_margin = p_content_valuation(lhs - rhs, prime);
    switch (relation) {
        case Relation::congruent: v.holds = v.observed_margin.at_least(required); break;
        case Relation::incongruent: v.holds = !v.observed_margin.at_least(required); break;
        case Relation::equal: v.holds = v.observed_margin.is_infinite(); break;
    }
    v.lhs = std::move(lhs);
    v.rhs = std::move(rhs);
    return v;
}

}  // namespace stern
