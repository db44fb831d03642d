#include <doctest.h>

#include <numeric>
#include <random>

#include "seqdiv/arith.hpp"
#include "seqdiv/sieve.hpp"

using namespace seqdiv;

TEST_CASE("v2 basics") {
    CHECK(v2(u64(12)) == 2);
    CHECK(v2(u64(7)) == 0);
    CHECK(v2(u64(56)) == 3);  // the delta of the modulus-56 test rows
    CHECK(v2(Int(-48)) == 4);
    CHECK_THROWS_AS(v2(u64(0)), std::domain_error);
}

TEST_CASE("v2 strips to odd") {
    for (u64 n = 1; n <= 4096; ++n) {
        CHECK((n >> v2(n)) % 2 == 1);
    }
}

TEST_CASE("squarefree kernel") {
    CHECK(squarefree_signed(18) == 2);
    CHECK(squarefree_signed(-12) == -3);
    CHECK(squarefree_signed(6) == 6);
    CHECK(squarefree_signed(1) == 1);
    CHECK_THROWS_AS(squarefree_signed(0), std::domain_error);

    // n / kernel is a perfect square and the kernel has no repeated factor.
    for (i64 n = 1; n <= 2000; ++n) {
        i64 s = squarefree_signed(n);
        CHECK(n % s == 0);
        i64 m2 = n / s;
        u64 r = isqrt_u64(static_cast<u64>(m2));
        CHECK(static_cast<i64>(r * r) == m2);
        for (i64 q = 2; q * q <= s; ++q) CHECK(s % (q * q) != 0);
    }
}

TEST_CASE("quadratic field discriminants") {
    CHECK(quad_discriminant(2, 1) == 8);  // disc Q(sqrt(2))
    CHECK(quad_discriminant(5, 1) == 5);
    CHECK(quad_discriminant(6, 1) == 24);
    CHECK(quad_discriminant(3, 1) == 12);
    CHECK(quad_discriminant(-1, 1) == -4);
    CHECK(quad_discriminant(-3, 1) == -3);
    CHECK(quad_discriminant(1, 2) == 8);   // Q(sqrt(1/2)) = Q(sqrt(2))
    CHECK(quad_discriminant(2, 3) == 24);  // Q(sqrt(2/3)) = Q(sqrt(6))
    CHECK_THROWS_AS(quad_discriminant(4, 1), std::domain_error);
    CHECK_THROWS_AS(quad_discriminant(9, 4), std::domain_error);

    // D = 0 or 1 (mod 4) always.
    for (i64 n : {-30, -15, -7, -2, 7, 10, 11, 33, 47}) {
        Int D = quad_discriminant(n, 1);
        Int m4 = ((D % 4) + 4) % 4;
        CHECK((m4 == 0 || m4 == 1));
    }
}

TEST_CASE("kronecker: known values") {
    CHECK(kronecker(12, u64(1)) == 1);
    CHECK(kronecker(12, u64(5)) == -1);
    CHECK(kronecker(12, u64(11)) == 1);
    CHECK(kronecker(5, u64(5)) == 0);
    CHECK(kronecker(8, u64(7)) == 1);   // (2/p) for p = 7 (mod 8)
    CHECK(kronecker(8, u64(3)) == -1);  // (2/p) for p = 3 (mod 8)
}

TEST_CASE("kronecker agrees with the Euler criterion") {
    auto primes = [] {
        std::vector<u64> ps;
        for (u64 n = 3; n <= 10000; n += 2)
            if (is_prime_u64(n)) ps.push_back(n);
        return ps;
    }();
    for (i64 D : {-20, -15, -8, -4, -3, 5, 8, 12, 21, 24, 28, 40}) {
        for (u64 p : primes) {
            u64 Dmod = static_cast<u64>(((D % static_cast<i64>(p)) + static_cast<i64>(p)) %
                                        static_cast<i64>(p));
            if (Dmod == 0) continue;
            u64 euler = powmod(Dmod, (p - 1) / 2, p);
            int expected = euler == 1 ? 1 : -1;
            CHECK(kronecker(D, p) == expected);
        }
    }
}

TEST_CASE("kronecker is multiplicative in the denominator") {
    for (i64 D : {-15, -4, 5, 12, 24}) {
        // Exhaustive over products up to 1e4.
        std::vector<int> k(10001);
        for (u64 n = 1; n <= 10000; ++n) k[n] = kronecker(D, n);
        for (u64 n1 = 1; n1 <= 10000; ++n1)
            for (u64 n2 = n1; n1 * n2 <= 10000; ++n2) REQUIRE(k[n1 * n2] == k[n1] * k[n2]);
        // Randomized over the full 1e4 x 1e4 range.
        std::mt19937_64 rng(0xD + D);
        std::uniform_int_distribution<u64> dist(1, 10000);
        for (int i = 0; i < 20000; ++i) {
            u64 n1 = dist(rng), n2 = dist(rng);
            REQUIRE(kronecker(D, n1 * n2) == k[n1] * k[n2]);
        }
    }
}

TEST_CASE("perfect power decomposition") {
    auto d1 = perfect_power_decompose(9, 1);
    CHECK(d1.r0_num == 3);
    CHECK(d1.r0_den == 1);
    CHECK(d1.h == 2);
    CHECK(d1.lambda == 1);
    CHECK(d1.h_odd == 1);

    auto d2 = perfect_power_decompose(8, 27);
    CHECK(d2.r0_num == 2);
    CHECK(d2.r0_den == 3);
    CHECK(d2.h == 3);
    CHECK(d2.lambda == 0);
    CHECK(d2.h_odd == 3);

    auto d3 = perfect_power_decompose(16, 1);
    CHECK(d3.r0_num == 2);
    CHECK(d3.h == 4);
    CHECK(d3.lambda == 2);
    CHECK(d3.h_odd == 1);

    auto d4 = perfect_power_decompose(1, 8);  // r = 1/8 -> r0 = 1/2
    CHECK(d4.r0_num == 1);
    CHECK(d4.r0_den == 2);
    CHECK(d4.h == 3);

    CHECK_THROWS_AS(perfect_power_decompose(1, 1), std::domain_error);
    CHECK_THROWS_AS(perfect_power_decompose(4, 2), std::domain_error);  // not reduced
}

TEST_CASE("perfect power round trip and minimality") {
    for (u64 num = 2; num <= 512; ++num) {
        for (u64 den : {u64(1), u64(2), u64(3), u64(5), u64(9)}) {
            if (std::gcd(num, den) != 1 || num == den) continue;
            auto d = perfect_power_decompose(num, den);
            Int back_num = 1, back_den = 1;
            for (unsigned i = 0; i < d.h; ++i) {
                back_num *= d.r0_num;
                back_den *= d.r0_den;
            }
            CHECK(back_num == num);
            CHECK(back_den == den);
            CHECK(d.h == (1u << d.lambda) * d.h_odd);
            CHECK(d.h_odd % 2 == 1);
            // r0 admits no further decomposition.
            if (d.r0_num != 1 && d.r0_den != 1) {
                CHECK(perfect_power_decompose(d.r0_num, d.r0_den).h == 1);
            }
        }
    }
}

TEST_CASE("mod_pow") {
    CHECK(mod_pow(3, 3, 7) == 6);
    CHECK(mod_pow(2, 6, 13) == 12);  // 13 | 2^6 + 1
    CHECK(mod_pow(5, 0, 11) == 1);
    CHECK(mod_pow(-2, 3, 11) == 3);  // (-8) mod 11
    CHECK_THROWS_AS(mod_pow(2, 3, 1), std::domain_error);
}

TEST_CASE("deterministic Miller-Rabin") {
    std::vector<u32> primes;
    std::vector<bool> composite(100001, false);
    for (u64 i = 2; i * i <= 100000; ++i)
        if (!composite[i])
            for (u64 j = i * i; j <= 100000; j += i) composite[j] = true;
    for (u64 n = 0; n <= 100000; ++n) CHECK(is_prime_u64(n) == (n >= 2 && !composite[n]));
    CHECK(is_prime_u64(u64(1) << 61) == false);
    CHECK(is_prime_u64(2305843009213693951ull));  // 2^61 - 1
    CHECK(!is_prime_u64(2305843009213693951ull - 2));
}

TEST_CASE("factorize") {
    auto f = factorize(2ull * 2 * 3 * 3 * 3 * 1000003);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<u64, unsigned>{2, 2});
    CHECK(f[1] == std::pair<u64, unsigned>{3, 3});
    CHECK(f[2] == std::pair<u64, unsigned>{1000003, 1});
    CHECK(factorize(1).empty());
    // Needs the rho fallback: product of two primes above the trial bound.
    auto g = factorize(1000003ull * 1000033ull);
    REQUIRE(g.size() == 2);
    CHECK(g[0].first == 1000003);
    CHECK(g[1].first == 1000033);
}

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(56) == 24);
    CHECK(euler_phi(97) == 96);
}
