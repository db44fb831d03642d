#pragma once

#include <string>

#include <json.hpp>

#include "seqdiv/empirical.hpp"
#include "seqdiv/extremal.hpp"
#include "seqdiv/tables.hpp"

namespace seqdiv {

// Rationals serialize as exact "p/q" strings; decimal fields are display-only.
nlohmann::json density_record(const Params& p, const DensityResult& r, const ExtremalClass& ex);
nlohmann::json count_record(const EmpiricalCount& ec);
nlohmann::json verify_record(const EmpiricalCount& ec, const DensityResult& exact,
                             double tolerance);

// Tolerance band for an empirical ratio against exact relative density q
// over n class primes: max(0.01, 5 * sqrt(q(1-q)/n)).
double verify_tolerance(const Rat& phi_d_density, u64 class_total);

// Accepts plain integers and scientific notation ("250000", "1e8", "2.5e7").
u64 parse_scaled_u64(const std::string& s);

}  // namespace seqdiv
