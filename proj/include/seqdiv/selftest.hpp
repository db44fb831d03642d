#pragma once

#include <string>
#include <vector>

#include "seqdiv/rational.hpp"

namespace seqdiv {

// The verification grid: every (a, b) pair with a != b, every modulus
// d <= d_max, every class c coprime to d.
struct Grid {
    std::vector<u64> a_values;
    std::vector<u64> b_values;
    u64 d_max = 60;
};

// a in {2..12} u {16, 25, 27, 36, 81, 256}, b in {1, 2, 3, 5}, d <= 60.
Grid default_grid();

struct SelftestReport {
    u64 cases = 0;            // (a, b, c, d) tuples checked
    u64 class_sums = 0;       // (a, b, d) class-sum identities checked
    u64 extremal_checked = 0;
    std::vector<std::string> series_failures;     // tables vs series mismatches
    std::vector<std::string> class_sum_failures;  // sum_c density != delta(r)
    std::vector<std::string> extremal_failures;   // kind vs density disagreements

    std::vector<std::string> failures() const;
    bool ok() const {
        return series_failures.empty() && class_sum_failures.empty() &&
               extremal_failures.empty();
    }
};

// Runs the cross-route checks over the grid:
//   - tables vs series: density() == density_series() exactly per tuple
//   - class sums: sum_c density(a,b,c,d) == density_table0(a,b) exactly
//   - extremal agreement: classify_extremal kind matches density in {0, 1/phi(d)}
// Work is distributed over (a, b) pairs across `threads` workers.
SelftestReport run_selftest(const Grid& grid, unsigned threads);

}  // namespace seqdiv
