#include <doctest.h>

#include "seqdiv/report.hpp"
#include "seqdiv/series.hpp"

using namespace seqdiv;

TEST_CASE("rational formatting") {
    CHECK(rat_str(Rat(1, 6)) == "1/6");
    CHECK(rat_str(Rat(2, 4)) == "1/2");
    CHECK(rat_str(Rat(0)) == "0");
    CHECK(rat_str(Rat(5)) == "5");
    CHECK(rat_str(Rat(-3, 9)) == "-1/3");
}

TEST_CASE("density record round-trips byte-identically") {
    Params p = extract_params(3, 1, 1, 12);
    auto rec = density_record(p, density(p), classify_extremal(p));
    CHECK(rec["density"] == "1/6");
    CHECK(rec["phi_d_density"] == "2/3");
    CHECK(rec["table"] == "T2");
    std::string once = rec.dump();
    std::string twice = nlohmann::json::parse(once).dump();
    CHECK(once == twice);
}

TEST_CASE("count record round-trips byte-identically") {
    EmpiricalCount ec;
    ec.x_limit = 1000;
    ec.a = 2;
    ec.b = 1;
    ec.c = 3;
    ec.d = 8;
    ec.total = 44;
    ec.dividing = 44;
    std::string once = count_record(ec).dump();
    std::string twice = nlohmann::json::parse(once).dump();
    CHECK(once == twice);
    CHECK(nlohmann::json::parse(once)["ratio"] == 1.0);
}

TEST_CASE("scaled number parsing") {
    CHECK(parse_scaled_u64("250000") == 250000);
    CHECK(parse_scaled_u64("1e8") == 100000000);
    CHECK(parse_scaled_u64("2.5e7") == 25000000);
    CHECK_THROWS_AS(parse_scaled_u64("1e8x"), std::domain_error);
    CHECK_THROWS_AS(parse_scaled_u64("1.5"), std::domain_error);
    CHECK_THROWS_AS(parse_scaled_u64(""), std::domain_error);
}

TEST_CASE("verify tolerance floor") {
    CHECK(verify_tolerance(Rat(1, 2), 0) == 0.01);
    CHECK(verify_tolerance(Rat(1, 2), 1000000) == 0.01);
    CHECK(verify_tolerance(Rat(1, 2), 100) > 0.01);
}
