#pragma once

#include <vector>

#include "seqdiv/params.hpp"

namespace seqdiv {

// One term of the density series
//   delta_{a,b}(c,d) = sum_{j>=1} ( tau(j)/[N_j:Q] - tau'(j)/[N'_j:Q] ),
// where N_j = Q(zeta_{2^j}, r^(1/2^(j-1)), zeta_d) and N'_j adjoins the next
// 2-power root. tau(j) = 1 iff the automorphism zeta_d -> zeta_d^c is the
// identity on N_j's intersection with Q(zeta_d), likewise tau'.
struct SeriesTerm {
    unsigned j = 0;
    Int deg_Nj;
    Int deg_Njp;
    int tau = 0;
    int tau_p = 0;
    Rat term;  // tau/deg_Nj - tau_p/deg_Njp
};

// (C_j): D' | d' and delta0 <= max(j, delta). Controls whether sqrt(r0)-level
// elements of N_j already lie in the cyclotomic part.
bool condition_Cj(const Params& p, unsigned j);

// Field degrees over Q via the closed per-case formulas (both families carry
// a phi(d') factor; the direct Kummer-degree computation below is the oracle
// that pins that normalization).
Int degree_Nj(const Params& p, unsigned j);
Int degree_Njp(const Params& p, unsigned j);

// [Q(zeta_kt, r^(1/k)) : Q] = phi(kt) * k / (eps * gcd(k, h)) with eps = 2
// iff lcm(2^(v2(h*t)+1), D(r0)) divides kt, t = kt_total / k. Independent
// degree oracle; throws std::domain_error if k does not divide kt_total.
Int kummer_degree(u64 k, u64 kt_total, const Params& p);

// Intersection coefficients. tau(j) = tau'(j) for every j != lambda+1.
int tau(const Params& p, unsigned j);
int tau_prime(const Params& p, unsigned j);

SeriesTerm series_term(const Params& p, unsigned j);

// Explicit sum to J0 = max(lambda+2, delta, delta0, 4) plus the exact
// geometric tail term(J0)/3. The 1/4 tail ratio is asserted on the next two
// terms before the tail is closed; a failed assertion throws internal_error.
Rat density_series(const Params& p);
Rat density_series(u64 a, u64 b, i64 c, u64 d);

}  // namespace seqdiv
