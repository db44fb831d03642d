#include "seqdiv/series.hpp"

#include <algorithm>
#include <numeric>

namespace seqdiv {

bool condition_Cj(const Params& p, unsigned j) {
    if (Int(p.d_odd) % p.D_prime != 0) return false;
    return p.delta0 <= std::max(j, p.delta);
}

Int degree_Nj(const Params& p, unsigned j) {
    unsigned mx = std::max(j, p.delta);
    unsigned e;
    if (j <= p.lambda + 1)
        e = mx - 1;
    else if (condition_Cj(p, j))
        e = mx + j - p.lambda - 3;
    else
        e = mx + j - p.lambda - 2;
    return Int(euler_phi(p.d_odd)) << e;
}

Int degree_Njp(const Params& p, unsigned j) {
    unsigned mx = std::max(j, p.delta);
    unsigned e;
    if (j <= p.lambda)
        e = mx - 1;
    else if (condition_Cj(p, j))
        e = mx + j - p.lambda - 2;
    else
        e = mx + j - p.lambda - 1;
    return Int(euler_phi(p.d_odd)) << e;
}

Int kummer_degree(u64 k, u64 kt_total, const Params& p) {
    if (k == 0 || kt_total % k != 0)
        throw std::domain_error("kummer_degree: k must divide kt_total");
    u64 t = kt_total / k;
    Int n_t = Int(1) << (v2(p.h * t) + 1);
    n_t = boost::multiprecision::lcm(n_t, p.D_r0);
    unsigned eps = (Int(kt_total) % n_t == 0) ? 2 : 1;
    Int deg = Int(euler_phi(kt_total)) * k;
    return deg / (eps * std::gcd(k, static_cast<u64>(p.h)));
}

namespace {

// Cyclotomic part of the intersection field: fixed by zeta_d -> zeta_d^c
// iff c = 1 (mod 2^min(j,delta)), i.e. min(j, delta) <= gamma.
bool cyclotomic_fixed(const Params& p, unsigned j) {
    return p.gamma >= ExtNat(std::min<u64>(j, p.delta));
}

// Quadratic part for the generic (non sqrt(2)) regime once (C_j) holds past
// the rational-root range: Q(sqrt(r0)) itself when D(r0) | d, otherwise the
// twisted field Q(sqrt(t)).
bool quadratic_fixed(const Params& p) {
    const Int& D = p.delta0 <= p.delta ? p.D_r0 : p.D_t.value();
    return kronecker(D, p.c) == 1;
}

int tau_generic(const Params& p, unsigned j, unsigned rational_root_bound) {
    bool cyc = cyclotomic_fixed(p, j);
    if (j <= rational_root_bound) return cyc ? 1 : 0;
    if (!condition_Cj(p, j)) return cyc ? 1 : 0;
    return (cyc && quadratic_fixed(p)) ? 1 : 0;
}

// sqrt(2) regime: the intersection fields follow min(j, delta) except in the
// small-j cells where sqrt(2) (or all of Q(zeta_8)) slips in via zeta_8.
int tau_sqrt2(const Params& p, unsigned j) {
    if (p.lambda == 0 && j == 2 && p.delta >= 3) return p.c % 8 == 1 ? 1 : 0;
    return cyclotomic_fixed(p, j) ? 1 : 0;
}

int tau_prime_sqrt2(const Params& p, unsigned j) {
    if (p.delta >= 3) {
        // K'_1 = Q(sqrt(2)) when lambda = 0: fixed iff c = +-1 (mod 8).
        if (p.lambda == 0 && j == 1) return (p.c % 8 == 1 || p.c % 8 == 7) ? 1 : 0;
        // K'_2 = Q(zeta_8) when lambda <= 1.
        if (p.lambda <= 1 && j == 2) return p.c % 8 == 1 ? 1 : 0;
    }
    return cyclotomic_fixed(p, j) ? 1 : 0;
}

}  // namespace

int tau(const Params& p, unsigned j) {
    if (p.sqrt2_regime) return tau_sqrt2(p, j);
    return tau_generic(p, j, p.lambda + 1);
}

int tau_prime(const Params& p, unsigned j) {
    if (p.sqrt2_regime) return tau_prime_sqrt2(p, j);
    return tau_generic(p, j, p.lambda);
}

SeriesTerm series_term(const Params& p, unsigned j) {
    SeriesTerm t;
    t.j = j;
    t.deg_Nj = degree_Nj(p, j);
    t.deg_Njp = degree_Njp(p, j);
    t.tau = tau(p, j);
    t.tau_p = tau_prime(p, j);
    t.term = Rat(t.tau, 1) / Rat(t.deg_Nj, 1) - Rat(t.tau_p, 1) / Rat(t.deg_Njp, 1);
    return t;
}

Rat density_series(const Params& p) {
    unsigned j0 = std::max({p.lambda + 2, p.delta, p.delta0, 4u});

    Rat sum = 0;
    for (unsigned j = 1; j <= j0; ++j) sum += series_term(p, j).term;

    Rat last = series_term(p, j0).term;
    Rat next1 = series_term(p, j0 + 1).term;
    Rat next2 = series_term(p, j0 + 2).term;
    if (next1 * 4 != last || next2 * 16 != last)
        throw internal_error("density_series: geometric tail ratio is not 1/4 at J0 = " +
                             std::to_string(j0));
    return sum + last / 3;
}

Rat density_series(u64 a, u64 b, i64 c, u64 d) {
    return density_series(extract_params(a, b, c, d));
}

}  // namespace seqdiv
