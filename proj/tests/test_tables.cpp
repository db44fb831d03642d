#include <doctest.h>

#include <numeric>

#include "section9_rows.hpp"
#include "seqdiv/tables.hpp"

using namespace seqdiv;
using seqdiv::testdata::parse_rat;

TEST_CASE("table integrity self-check passes") {
    CHECK_NOTHROW(check_table_integrity());
}

TEST_CASE("density_table0") {
    CHECK(density_table0(3, 1) == Rat(2, 3));
    CHECK(density_table0(2, 1) == Rat(17, 24));
    CHECK(density_table0(4, 1) == Rat(5, 12));
    CHECK(density_table0(16, 1) == Rat(1, 12));  // lambda = 2: 2^-2/3
    CHECK(density_table0(9, 1) == Rat(1, 3));
    CHECK(density_table0(1, 2) == Rat(17, 24));  // r = 1/2, same field
    CHECK(density_table0(12, 1) == Rat(2, 3));
    CHECK_THROWS_AS(density_table0(5, 5), std::domain_error);
}

TEST_CASE("the published corollary values") {
    CHECK(density(3, 1, 1, 12).density == Rat(1, 6));
    CHECK(density(3, 1, 5, 12).density == Rat(1, 4));
    CHECK(density(3, 1, 7, 12).density == Rat(1, 4));
    CHECK(density(3, 1, 11, 12).density == Rat(0));
    CHECK(density(5, 1, 1, 10).density == Rat(1, 12));
    CHECK(density(5, 1, 3, 10).density == Rat(1, 4));
    CHECK(density(5, 1, 7, 10).density == Rat(1, 4));
    CHECK(density(5, 1, 9, 10).density == Rat(1, 12));
}

TEST_CASE("density anchors from tables 4-6") {
    DensityResult r = density(2, 1, 1, 8);
    CHECK(r.phi_d_density == Rat(5, 6));
    CHECK(r.density == Rat(5, 24));
    CHECK(r.table == DensityCase::T6);

    CHECK(density(2, 1, 9, 16).phi_d_density == Rat(3, 4));
    CHECK(density(2, 1, 7, 8).density == 0);
    CHECK(density(2, 1, 3, 8).phi_d_density == 1);
    CHECK(density(9, 1, 17, 56).phi_d_density == Rat(5, 6));
    // The cell missing from the printed Table 5.
    DensityResult gap = density(4, 1, 9, 16);
    CHECK(gap.phi_d_density == Rat(1, 2));
    CHECK(gap.row == "T5.gap");
}

TEST_CASE("relative densities of the failing conjectures") {
    CHECK(relative_density(3, 1, 1, 12) == Rat(1, 4));
    CHECK(relative_density(5, 1, 9, 10) == Rat(1, 8));
    CHECK(relative_density(5, 1, 1, 10) == Rat(1, 8));
    CHECK(relative_density(3, 1, 11, 12) == 0);
}

TEST_CASE("every published experiment row reproduces exactly") {
    for (const auto& row : testdata::section9_rows()) {
        CAPTURE(row.c);
        CAPTURE(row.d);
        CAPTURE(row.a);
        DensityResult r = density(row.a, 1, static_cast<i64>(row.c), row.d);
        CHECK(r.phi_d_density == parse_rat(row.phi_d_density));
        CHECK(table_name(r.table) == row.table);
    }
}

TEST_CASE("dump_tables") {
    auto rows = dump_tables();
    size_t t1_rows = 0;
    bool saw_t4_first = false, saw_t5_gamma2 = false;
    for (const auto& r : rows) {
        if (r.table == "T1") ++t1_rows;
        if (r.id == "T4.1" && r.value == "17/24") saw_t4_first = true;
        if (r.id == "T5.8" && r.value == "1") saw_t5_gamma2 = true;
    }
    CHECK(t1_rows == 5);
    CHECK(saw_t4_first);
    CHECK(saw_t5_gamma2);
    // Table 0 present as well.
    CHECK(rows[0].table == "T0");
}

TEST_CASE("phi(d) * density stays in [0, 1] with dyadic/triadic denominator") {
    for (u64 a : {2u, 3u, 5u, 6u, 12u}) {
        for (u64 d = 1; d <= 40; ++d) {
            for (u64 c = 1; c <= d; ++c) {
                if (std::gcd(c, d) != 1) continue;
                DensityResult r = density(a, 1, static_cast<i64>(c), d);
                REQUIRE(r.phi_d_density >= 0);
                REQUIRE(r.phi_d_density <= 1);
                REQUIRE(has_dyadic_or_triadic_denominator(r.phi_d_density));
                REQUIRE(r.phi_d_density == r.density * euler_phi(d));
            }
        }
    }
}

TEST_CASE("density validates inputs") {
    CHECK_THROWS_AS(density(3, 1, 0, 12), std::domain_error);
    CHECK_THROWS_AS(density(3, 3, 1, 12), std::domain_error);
}
