#include <doctest.h>

#include <numeric>

#include "seqdiv/params.hpp"
#include "seqdiv/tables.hpp"

using namespace seqdiv;

TEST_CASE("ExtNat total order") {
    CHECK(ExtNat(3) < ExtNat(5));
    CHECK(ExtNat(5) < ExtNat::infinity());
    CHECK(ExtNat::infinity() == ExtNat::infinity());
    CHECK(ExtNat::infinity() >= ExtNat(1000000));
    CHECK(ExtNat(7).min_with(3) == 3);
    CHECK(ExtNat(2).min_with(3) == 2);
    CHECK(ExtNat::infinity().min_with(9) == 9);
    CHECK(ExtNat(4).value() == 4);
    CHECK_THROWS_AS(ExtNat::infinity().value(), std::domain_error);
}

TEST_CASE("extract_params: (3, 1, 5, 12)") {
    Params p = extract_params(3, 1, 5, 12);
    CHECK(p.r0_num == 3);
    CHECK(p.h == 1);
    CHECK(p.lambda == 0);
    CHECK(p.delta == 2);
    CHECK(p.d_odd == 3);
    CHECK(p.gamma == ExtNat(2));
    CHECK(p.D_r0 == 12);
    CHECK(p.delta0 == 2);
    CHECK(p.D_prime == 3);
    CHECK(!p.sqrt2_regime);
}

TEST_CASE("extract_params: (6, 1, 7, 30)") {
    Params p = extract_params(6, 1, 7, 30);
    CHECK(p.r0_num == 6);
    CHECK(p.uv == 6);
    CHECK(p.D_r0 == 24);
    CHECK(p.delta0 == 3);
    CHECK(p.D_prime == 3);
    CHECK(p.delta == 1);
    CHECK(p.d_odd == 15);
    CHECK(p.gamma == ExtNat(1));
    REQUIRE(p.t.has_value());
    CHECK(*p.t == Rat(-3));  // (-1/3) * 3
    CHECK(*p.D_t == -3);
}

TEST_CASE("extract_params: (2, 1, 1, 8) and the gamma = infinity convention") {
    Params p = extract_params(2, 1, 1, 8);
    CHECK(p.r0_num == 2);
    CHECK(p.lambda == 0);
    CHECK(p.delta == 3);
    CHECK(p.d_odd == 1);
    CHECK(!p.gamma.is_finite());
    CHECK(p.sqrt2_regime);
    CHECK(!p.t.has_value());
    CHECK(!p.D_t.has_value());
}

TEST_CASE("extract_params: canonicalization and errors") {
    CHECK(extract_params(3, 1, -1, 12).c == 11);
    CHECK(extract_params(3, 1, 17, 12).c == 5);
    CHECK(extract_params(3, 1, 7, 1).c == 1);   // d = 1: single class
    CHECK(!extract_params(3, 1, 7, 1).gamma.is_finite());
    CHECK(extract_params(3, 1, 3, 2).c == 1);   // d = 2
    CHECK_THROWS_AS(extract_params(3, 3, 1, 12), std::domain_error);
    CHECK_THROWS_AS(extract_params(3, 1, 0, 12), std::domain_error);
    CHECK_THROWS_AS(extract_params(3, 1, 4, 12), std::domain_error);
    CHECK_THROWS_AS(extract_params(0, 1, 1, 12), std::domain_error);
    CHECK_THROWS_AS(extract_params(3, 1, 1, 0), std::domain_error);
}

TEST_CASE("extract_params: reduction of a/b happens first") {
    Params p = extract_params(8, 2, 1, 5);  // r = 4 = 2^2
    CHECK(p.r_num == 4);
    CHECK(p.r_den == 1);
    CHECK(p.r0_num == 2);
    CHECK(p.h == 2);
    CHECK(p.lambda == 1);
}

TEST_CASE("t follows the squarefree kernel of uv, not uv itself") {
    // uv = 12: even, but kernel 3 is odd, so t = -r0 (field Q(sqrt(-3))).
    Params p = extract_params(12, 1, 1, 3);
    CHECK(p.D_r0 == 12);
    CHECK(p.delta0 == 2);
    REQUIRE(p.t.has_value());
    CHECK(*p.t == Rat(-12));
    CHECK(*p.D_t == -3);

    // uv = 10: kernel 10 even, t = (-1/5)*5 = 5.
    Params q = extract_params(10, 1, 1, 5);
    CHECK(q.D_r0 == 40);
    CHECK(q.delta0 == 3);
    CHECK(*q.t == Rat(5));
    CHECK(*q.D_t == 5);
}

TEST_CASE("classify: known cases") {
    CHECK(classify(extract_params(3, 1, 5, 12)) == DensityCase::T2);
    CHECK(classify(extract_params(6, 1, 5, 12)) == DensityCase::T3);
    CHECK(classify(extract_params(2, 1, 5, 12)) == DensityCase::T4);
    CHECK(classify(extract_params(9, 1, 17, 56)) == DensityCase::T1);
    CHECK(classify(extract_params(4, 1, 17, 32)) == DensityCase::T5);
    CHECK(classify(extract_params(2, 1, 1, 8)) == DensityCase::T6);
    // 1/2 and 2/9 land in the sqrt(2) regime too.
    CHECK(classify(extract_params(1, 2, 1, 8)) == DensityCase::T6);
    CHECK(classify(extract_params(2, 9, 1, 8)) == DensityCase::T6);
}

TEST_CASE("classify: exhaustive and gamma-free over a wide enumeration") {
    // Classification cannot depend on c; enumerate (a, b, d).
    for (u64 a = 1; a <= 64; ++a) {
        for (u64 b = 1; b <= 8; ++b) {
            if (a == b) continue;
            for (u64 d = 1; d <= 72; ++d) {
                Params p = extract_params(a, b, 1, d);
                DensityCase t = classify(p);
                bool sqrt2 = p.sqrt2_regime;
                bool divides = Int(p.d_odd) % p.D_prime == 0;
                int expected = -1;
                if (!sqrt2 && !divides) expected = 0;
                if (!sqrt2 && divides && p.delta0 <= p.delta) expected = 1;
                if (!sqrt2 && divides && p.delta0 > p.delta) expected = 2;
                if (sqrt2 && p.delta <= 2) expected = 3;
                if (sqrt2 && p.delta >= 3 && p.lambda > 0) expected = 4;
                if (sqrt2 && p.delta >= 3 && p.lambda == 0) expected = 5;
                REQUIRE(static_cast<int>(t) == expected);
            }
        }
    }
}

TEST_CASE("class invariance: density depends only on the class of c") {
    for (u64 a : {3u, 6u, 2u, 5u}) {
        for (u64 d : {12u, 30u, 8u, 40u}) {
            for (u64 c = 1; c <= d; ++c) {
                if (std::gcd(c, d) != 1) continue;
                DensityResult base = density(a, 1, static_cast<i64>(c), d);
                for (u64 k = 1; k <= 8; ++k) {
                    DensityResult shifted = density(a, 1, static_cast<i64>(c + k * d), d);
                    REQUIRE(shifted.density == base.density);
                    REQUIRE(shifted.row == base.row);
                }
            }
        }
    }
}
