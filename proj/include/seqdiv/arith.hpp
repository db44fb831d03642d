#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "seqdiv/rational.hpp"

namespace seqdiv {

// Raised when the table/series machinery contradicts itself (row coverage,
// geometric-tail ratio, cross-route mismatch). Maps to CLI exit code 3.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// --- 2-adic valuations ------------------------------------------------------

// Largest e with 2^e | n. n must be nonzero.
unsigned v2(u64 n);
unsigned v2(const Int& n);
inline u64 odd_part(u64 n) { return n >> v2(n); }

// --- modular arithmetic (64-bit hot path) ------------------------------------

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod(u64 base, u64 exp, u64 m);

// base^exp mod m in [0, m); base may be negative, m >= 2.
u64 mod_pow(i64 base, u64 exp, u64 m);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(u64 n);

// Prime factorization, ascending. Trial division up to 10^6, then
// Pollard-Brent rho for the cofactor.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

u64 euler_phi(u64 n);

// --- squarefree kernel / discriminant / Kronecker ----------------------------

// s squarefree with n = s * m^2, sign(s) = sign(n). n must be nonzero.
i64 squarefree_signed(i64 n);

// Squarefree kernel of x*y for coprime x, y (kernel of a product of coprimes
// is the product of the kernels). Serves values too large for i64.
Int squarefree_kernel_coprime(u64 x, u64 y);

// Discriminant of Q(sqrt(num/den)): s if s = 1 (mod 4) else 4s, where s is the
// squarefree kernel of num*den. Requires num/den in lowest terms, nonzero,
// not a perfect rational square.
Int quad_discriminant(i64 num, u64 den);
Int quad_discriminant(const Rat& q);

// Kronecker symbol (D/n), n >= 1, via the reciprocity recursion (the Euler
// criterion stays an independent test oracle).
int kronecker(const Int& D, const Int& n);
int kronecker(const Int& D, u64 n);

// --- perfect powers -----------------------------------------------------------

struct PowerDecomposition {
    u64 r0_num;       // r0 = r0_num / r0_den, not a proper power of a rational
    u64 r0_den;
    unsigned h;       // num/den = r0^h, h maximal
    unsigned lambda;  // h = 2^lambda * h_odd
    unsigned h_odd;
};

// Requires num/den in lowest terms and != 1.
PowerDecomposition perfect_power_decompose(u64 num, u64 den);

}  // namespace seqdiv
