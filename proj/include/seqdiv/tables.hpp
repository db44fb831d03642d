#pragma once

#include <string>
#include <vector>

#include "seqdiv/params.hpp"

namespace seqdiv {

struct DensityResult {
    Rat density;        // delta_{a,b}(c,d)
    Rat phi_d_density;  // phi(d) * density, the relative density within the class
    DensityCase table;
    std::string row;    // row identifier, e.g. "T2.5"
};

// Unconditional density of primes dividing {a^k + b^k}:
//   2^(1-lambda)/3 outside the Q(sqrt(2)) regime, else 17/24, 5/12,
//   2^(-lambda)/3 for lambda = 0, 1, >= 2.
Rat density_table0(u64 a, u64 b);

// Closed-form density via the table matching classify(); exact rational.
DensityResult density(const Params& p);
DensityResult density(u64 a, u64 b, i64 c, u64 d);

// density / density_table0: fraction of the sequence's prime divisors that
// fall in the class.
Rat relative_density(u64 a, u64 b, i64 c, u64 d);

struct TableRowInfo {
    std::string table;      // "T0".."T6"
    std::string id;         // "T4.1", "T5.gap", ...
    std::string condition;  // human/machine readable predicate
    std::string value;      // phi(d)*density formula
};

// Every row of Tables 0-6 in declaration order.
std::vector<TableRowInfo> dump_tables();

// Enumerates the bounded parameter space (lambda <= 12, delta <= 12,
// gamma in {0..12, inf}, delta0 <= 6, symbol +-1, coherent c mod 8) and
// verifies each table's rows cover every cell, with agreeing values where
// rows overlap. Runs once automatically before the first density(); exposed
// for the self-test command. Throws internal_error on any violation.
void check_table_integrity();

}  // namespace seqdiv
