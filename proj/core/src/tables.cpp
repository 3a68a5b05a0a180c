#include "stern/tables.hpp"

#include "stern/bernoulli.hpp"
#include "stern/error.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace stern {

namespace {

std::string coeff_vector(const CyclotomicElement& x) {
    std::string out = "[";
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        out += (i ? ", " : "") + x.coeffs()[i].to_string();
    }
    return out + "]";
}

std::vector<DirichletCharacter> table_characters(const TableParams& params) {
    std::vector<DirichletCharacter> out;
    if (!params.chi.empty()) {
        for (const auto& text : params.chi) {
            if (text == "chi-4" || text == "-4") {
                out.push_back(chi_minus4());
            } else {
                out.push_back(make_character(CharacterKey::parse(text)));
            }
        }
        return out;
    }
    for (const long p : params.primes) {
        for (const long m : params.ms) {
            if (p < 2 || m < 1) {
                throw ConfigError("table: p and m must be positive");
            }
            auto chars = params.primitive_only
                             ? enumerate_primitive(static_cast<std::uint64_t>(p), static_cast<unsigned>(m))
                             : enumerate_characters(static_cast<std::uint64_t>(p), static_cast<unsigned>(m));
            out.insert(out.end(), chars.begin(), chars.end());
        }
    }
    return out;
}

std::vector<std::string> element_row(const std::string& chi, long k, const CyclotomicElement& x) {
    return {chi, std::to_string(k), x.to_string(), std::to_string(x.order()), coeff_vector(x)};
}

}  // namespace

const std::vector<std::string>& table_kinds() {
    static const std::vector<std::string> kinds{"bernoulli", "euler", "generalized-bernoulli", "l-values",
                                                "script-l"};
    return kinds;
}

ValueTable value_table(const std::string& kind, const TableParams& params) {
    if (params.k.empty()) {
        throw ConfigError("table: empty k range");
    }
    if (std::any_of(params.k.begin(), params.k.end(), [](long k) { return k < 0; })) {
        throw ConfigError("table: k must be non-negative");
    }
    ValueTable table;
    if (kind == "bernoulli") {
        table.columns = {"k", "B_k"};
        for (const long k : params.k) {
            table.rows.push_back({std::to_string(k), bernoulli_number(static_cast<unsigned>(k)).to_string()});
        }
        return table;
    }
    if (kind == "euler") {
        table.columns = {"k", "E_k"};
        for (const long k : params.k) {
            table.rows.push_back({std::to_string(k), euler_number(static_cast<unsigned>(k)).get_str()});
        }
        return table;
    }
    if (kind != "generalized-bernoulli" && kind != "l-values" && kind != "script-l") {
        throw ConfigError("unknown table kind '" + kind + "'");
    }
    const std::string value_name = kind == "generalized-bernoulli" ? "B_{k,chi}"
                                   : kind == "l-values"            ? "L(-k,chi)"
                                                                   : "script-L_{k,chi}";
    table.columns = {"chi", "k", value_name, "order", "coefficients"};
    for (const auto& chi : table_characters(params)) {
        const std::string label = chi.key().to_string();
        for (const long k : params.k) {
            const auto uk = static_cast<unsigned>(k);
            try {
                const CyclotomicElement value = kind == "generalized-bernoulli" ? generalized_bernoulli(uk, chi)
                                                : kind == "l-values"            ? l_value(uk, chi)
                                                                                : script_l(uk, chi);
                table.rows.push_back(element_row(label, k, value));
            } catch (const DomainError& e) {
                table.rows.push_back({label, std::to_string(k), std::string("undefined: ") + e.what(), "", ""});
            }
        }
    }
    return table;
}

void print_value_table(const ValueTable& table, std::ostream& out) {
    std::vector<std::size_t> width(table.columns.size());
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        width[c] = table.columns[c].size();
        for (const auto& row : table.rows) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    const auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const bool last = c + 1 == cells.size();
            out << std::left << std::setw(last ? 0 : static_cast<int>(width[c] + 2)) << cells[c];
        }
        out << '\n';
    };
    line(table.columns);
    for (const auto& row : table.rows) {
        line(row);
    }
}

void write_value_table_csv(const ValueTable& table, std::ostream& out) {
    const auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"") == std::string::npos) {
            return s;
        }
        std::string q = "\"";
        for (const char c : s) {
            q += c == '"' ? std::string("\"\"") : std::string(1, c);
        }
        return q + "\"";
    };
    const auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out << (c ? "," : "") << quote(cells[c]);
        }
        out << '\n';
    };
    line(table.columns);
    for (const auto& row : table.rows) {
        line(row);
    }
}

}  // namespace stern
