#include "seqdiv/params.hpp"

#include <numeric>

namespace seqdiv {

std::string table_name(DensityCase t) {
    switch (t) {
        case DensityCase::T1: return "T1";
        case DensityCase::T2: return "T2";
        case DensityCase::T3: return "T3";
        case DensityCase::T4: return "T4";
        case DensityCase::T5: return "T5";
        case DensityCase::T6: return "T6";
    }
    throw internal_error("table_name: bad DensityCase");
}

namespace {

u64 canonical_residue(i64 c, u64 d) {
    // Representative of c mod d in [1, d].
    i64 m = static_cast<i64>(d);
    i64 r = c % m;
    if (r <= 0) r += m;
    return static_cast<u64>(r);
}

}  // namespace

Params extract_params(u64 a, u64 b, i64 c_in, u64 d) {
    if (a < 1 || b < 1 || d < 1)
        throw std::domain_error("extract_params: a, b, d must be positive");
    if (a == b)
        throw std::domain_error("extract_params: degenerate ratio a = b");

    Params p;
    p.a = a;
    p.b = b;
    p.d = d;
    p.c = canonical_residue(c_in, d);
    if (std::gcd(p.c, d) != 1)
        throw std::domain_error("extract_params: invalid class, gcd(c, d) > 1");

    u64 g = std::gcd(a, b);
    p.r_num = a / g;
    p.r_den = b / g;

    auto pow = perfect_power_decompose(p.r_num, p.r_den);
    p.r0_num = pow.r0_num;
    p.r0_den = pow.r0_den;
    p.h = pow.h;
    p.lambda = pow.lambda;
    p.h_odd = pow.h_odd;

    p.delta = v2(d);
    p.d_odd = d >> p.delta;
    p.gamma = p.c == 1 ? ExtNat::infinity() : ExtNat(v2(p.c - 1));

    // Squarefree kernel s of u*v; u, v coprime, so the kernel primes are the
    // odd-exponent primes of the two factorizations.
    bool kernel_even = false;
    std::vector<u64> kernel_odd_primes;
    for (u64 part : {p.r0_num, p.r0_den}) {
        for (auto [q, e] : factorize(part)) {
            if ((e & 1) == 0) continue;
            if (q == 2)
                kernel_even = true;
            else
                kernel_odd_primes.push_back(q);
        }
    }
    Int s = kernel_even ? 2 : 1;
    for (u64 q : kernel_odd_primes) s *= q;

    p.uv = Int(p.r0_num) * Int(p.r0_den);
    p.D_r0 = (s % 4 == 1) ? s : 4 * s;
    p.delta0 = v2(p.D_r0);
    p.D_prime = p.D_r0 >> p.delta0;

    p.sqrt2_regime = (s == 2);

    if (!p.sqrt2_regime) {
        if (!kernel_even) {
            // Kernel odd: t = -r0, the adjoined field is Q(sqrt(-r0)).
            p.t = -p.r0();
        } else {
            // Kernel 2 p_1 ... p_k, k >= 1: t = prod (-1/p_i) p_i, the
            // squarefree integer = 1 (mod 4) with the kernel's odd primes.
            Int t = 1;
            for (u64 q : kernel_odd_primes) t *= (q % 4 == 1) ? Int(q) : -Int(q);
            p.t = Rat(t, 1);
        }
        p.D_t = quad_discriminant(*p.t);
    }

    return p;
}

DensityCase classify(const Params& p) {
    if (p.sqrt2_regime) {
        if (p.delta <= 2) return DensityCase::T4;
        return p.lambda > 0 ? DensityCase::T5 : DensityCase::T6;
    }
    if (Int(p.d_odd) % p.D_prime != 0) return DensityCase::T1;
    return p.delta0 <= p.delta ? DensityCase::T2 : DensityCase::T3;
}

}  // namespace seqdiv
