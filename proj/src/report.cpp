#include "seqdiv/report.hpp"

#include <cmath>
#include <stdexcept>

namespace seqdiv {

nlohmann::json density_record(const Params& p, const DensityResult& r, const ExtremalClass& ex) {
    return nlohmann::json{
        {"a", p.a},
        {"b", p.b},
        {"c", p.c},
        {"d", p.d},
        {"density", rat_str(r.density)},
        {"density_decimal", rat_double(r.density)},
        {"phi_d_density", rat_str(r.phi_d_density)},
        {"phi_d_density_decimal", rat_double(r.phi_d_density)},
        {"table", table_name(r.table)},
        {"row", r.row},
        {"extremal", extremal_kind_name(ex.kind)},
        {"extremal_case", ex.case_label},
    };
}

nlohmann::json count_record(const EmpiricalCount& ec) {
    nlohmann::json j{
        {"a", ec.a},     {"b", ec.b},         {"c", ec.c},
        {"d", ec.d},     {"x", ec.x_limit},   {"total", ec.total},
        {"dividing", ec.dividing},
    };
    if (auto r = ec.ratio()) j["ratio"] = *r;
    return j;
}

nlohmann::json verify_record(const EmpiricalCount& ec, const DensityResult& exact,
                             double tolerance) {
    nlohmann::json j = count_record(ec);
    j["exact"] = rat_str(exact.phi_d_density);
    j["exact_decimal"] = rat_double(exact.phi_d_density);
    double deviation = ec.ratio() ? std::abs(*ec.ratio() - rat_double(exact.phi_d_density)) : 0.0;
    j["deviation"] = deviation;
    j["tolerance"] = tolerance;
    j["within_tolerance"] = deviation <= tolerance;
    return j;
}

double verify_tolerance(const Rat& phi_d_density, u64 class_total) {
    if (class_total == 0) return 0.01;
    double q = rat_double(phi_d_density);
    return std::max(0.01, 5.0 * std::sqrt(q * (1.0 - q) / static_cast<double>(class_total)));
}

u64 parse_scaled_u64(const std::string& s) {
    if (s.empty()) throw std::domain_error("empty numeric argument");
    if (s.find_first_of("eE.") == std::string::npos) {
        size_t pos = 0;
        u64 v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::domain_error("bad numeric argument '" + s + "'");
        return v;
    }
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size() || v < 0 || v > 9.2e18 || std::floor(v) != v)
        throw std::domain_error("bad numeric argument '" + s + "'");
    return static_cast<u64>(v);
}

}  // namespace seqdiv
