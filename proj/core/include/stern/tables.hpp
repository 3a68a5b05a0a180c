#pragma once

#include "stern/characters.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace stern {

struct TableParams {
    std::vector<long> k;
    /// Characters for the character-valued kinds; empty means every
    /// character mod p^m for each p in primes and m in ms.
    std::vector<std::string> chi;
    std::vector<long> primes{2};
    std::vector<long> ms{3};
    bool primitive_only = true;
};

struct ValueTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

/// kind: bernoulli, euler, generalized-bernoulli, l-values or script-l.
/// Values are exact: rationals as "num/den", other cyclotomic elements as a
/// polynomial in zN plus the coefficient vector. Undefined cases (parity,
/// missing normaliser) become "undefined: <reason>" rows. Throws ConfigError
/// for an unknown kind or an empty k list.
ValueTable value_table(const std::string& kind, const TableParams& params);

const std::vector<std::string>& table_kinds();

void print_value_table(const ValueTable& table, std::ostream& out);
void write_value_table_csv(const ValueTable& table, std::ostream& out);

}  // namespace stern
