#pragma once

#include <string>
#include <vector>

#include "seqdiv/params.hpp"

namespace seqdiv {

enum class ExtremalKind { Zero, Full, Intermediate };

std::string extremal_kind_name(ExtremalKind k);

// Elementary classification of the density as 0, 1/phi(d) or strictly in
// between, with the quadratic-reciprocity certificate:
//   Zero: (a-i) lambda >= gamma, delta > gamma
//         (a-ii) lambda = gamma-1, delta > gamma, D(r0) | d, (D(r0)/c) = 1
//   Full: (b-i) lambda = delta = 0, D(r0) | d, (D(r0)/c) = -1
//         (b-ii) min(gamma, delta) > lambda, D(r0) | d, (D(r0)/c) = -1
// Outside p | 2ab at most finitely many primes escape the verdict (none in
// practice; extremal_exceptions surfaces any).
struct ExtremalClass {
    ExtremalKind kind = ExtremalKind::Intermediate;
    std::string case_label;  // "a-i", "a-ii", "b-i", "b-ii" or "none"
    std::string certificate;
};

ExtremalClass classify_extremal(const Params& p);
ExtremalClass classify_extremal(u64 a, u64 b, i64 c, u64 d);

// tau(p) = (p-1)/gcd(p-1, h); p | S_{a,b} is impossible when tau(p) is odd,
// or when 2 || tau(p) and r0 is a quadratic residue mod p. Requires p prime,
// p coprime to 2ab.
struct TauParityWitness {
    u64 tau_p = 0;
    unsigned v2_tau = 0;
    bool tau_odd = false;
    bool two_exact = false;  // 2 || tau(p)
    int symbol = 0;          // (D(r0)/p)
};

TauParityWitness tau_p_parity_witness(u64 p, u64 a, u64 b);

// Primes p <= limit, p = c (mod d), p coprime to 2ab, that contradict an
// extremal verdict (divisors under Zero, non-divisors under Full). Proven
// finite; expected empty. Returns empty for Intermediate.
std::vector<u64> extremal_exceptions(const Params& p, ExtremalKind kind, u64 limit);

}  // namespace seqdiv
