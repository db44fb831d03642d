#pragma once

#include <optional>
#include <string>

#include "seqdiv/arith.hpp"
#include "seqdiv/ext_nat.hpp"
#include "seqdiv/rational.hpp"

namespace seqdiv {

// The full parameter bundle derived from (a, b, c, d). Every table row,
// degree formula and intersection condition reads from here.
//
//   r  = a/b = r0^h, r0 not a proper power, h = 2^lambda * h_odd
//   d  = 2^delta * d_odd
//   gamma = v2(c - 1), infinite when c = 1
//   D_r0 = disc Q(sqrt(r0)) = 2^delta0 * D_prime, D_prime odd
//   t only exists outside the Q(sqrt(2)) regime: -r0 when the squarefree
//   kernel of u*v is odd, prod (-1/p_i) p_i over the kernel's odd primes
//   when it is even.
struct Params {
    u64 a = 0, b = 0;
    u64 c = 0;  // canonical representative in [1, d]
    u64 d = 0;

    u64 r_num = 0, r_den = 0;
    u64 r0_num = 0, r0_den = 0;
    unsigned h = 0, lambda = 0, h_odd = 0;

    unsigned delta = 0;
    u64 d_odd = 0;
    ExtNat gamma = ExtNat(0);

    Int uv;
    Int D_r0;
    unsigned delta0 = 0;
    Int D_prime;

    bool sqrt2_regime = false;  // Q(sqrt(r0)) == Q(sqrt(2))

    std::optional<Rat> t;
    std::optional<Int> D_t;

    Rat r0() const { return Rat(r0_num, r0_den); }
};

enum class DensityCase { T1, T2, T3, T4, T5, T6 };

std::string table_name(DensityCase t);

// Derives the bundle. c may be any integer; it is replaced by its canonical
// representative in [1, d]. Throws std::domain_error on a = b or invalid
// (a, b, d), std::domain_error("invalid class...") when gcd(c, d) > 1.
Params extract_params(u64 a, u64 b, i64 c, u64 d);

// Exactly one table applies per valid bundle:
//   T1: not sqrt2, D' does not divide d'
//   T2: not sqrt2, D' | d', delta0 <= delta
//   T3: not sqrt2, D' | d', delta0 >  delta
//   T4: sqrt2, delta <= 2
//   T5: sqrt2, delta >= 3, lambda > 0
//   T6: sqrt2, delta >= 3, lambda = 0
DensityCase classify(const Params& p);

}  // namespace seqdiv
