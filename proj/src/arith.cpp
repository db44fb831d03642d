#include "seqdiv/arith.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

namespace seqdiv {

unsigned v2(u64 n) {
    if (n == 0) throw std::domain_error("v2: argument must be nonzero");
    return static_cast<unsigned>(std::countr_zero(n));
}

unsigned v2(const Int& n) {
    if (n == 0) throw std::domain_error("v2: argument must be nonzero");
    unsigned e = 0;
    Int m = abs(n);
    while ((m & 1) == 0) {
        m >>= 1;
        ++e;
    }
    return e;
}

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = m > 1 ? 1 % m : 0;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 mod_pow(i64 base, u64 exp, u64 m) {
    if (m < 2) throw std::domain_error("mod_pow: modulus must be >= 2");
    i64 r = base % static_cast<i64>(m);
    if (r < 0) r += static_cast<i64>(m);
    return powmod(static_cast<u64>(r), exp, m);
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = v2(d);
    d >>= s;
    // This base set is known to be exact for all n < 3.3 * 10^24.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

u64 pollard_brent(u64 n) {
    // n odd composite, not a prime power of a small prime.
    for (u64 c = 1;; ++c) {
        auto f = [n, c](u64 x) { return (mulmod(x, x, n) + c) % n; };
        u64 x = 2, y = 2, d = 1, saved = 1;
        int power = 1, lam = 1;
        while (d == 1) {
            if (lam == power) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = f(y);
            ++lam;
            u64 diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            saved = mulmod(saved, diff, n);
            if (lam % 64 == 0) {
                d = std::gcd(saved, n);
                saved = 1;
            }
        }
        if (d == 1) d = std::gcd(saved, n);
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    if (n == 0) throw std::domain_error("factorize: argument must be nonzero");
    std::vector<std::pair<u64, unsigned>> factors;
    for (u64 p : {2ull, 3ull, 5ull}) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) factors.emplace_back(p, e);
    }
    // 30-wheel trial division up to 10^6.
    static constexpr u64 wheel[] = {4, 2, 4, 2, 4, 6, 2, 6};
    u64 p = 7;
    for (int i = 0; p <= 1000000 && p * p <= n; p += wheel[i], i = (i + 1) & 7) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) factors.emplace_back(p, e);
    }
    if (n > 1) {
        std::vector<u64> rest;
        factor_rec(n, rest);
        std::sort(rest.begin(), rest.end());
        for (size_t i = 0; i < rest.size();) {
            size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            factors.emplace_back(rest[i], static_cast<unsigned>(j - i));
            i = j;
        }
    }
    return factors;
}

u64 euler_phi(u64 n) {
    u64 result = n;
    for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
    return result;
}

i64 squarefree_signed(i64 n) {
    if (n == 0) throw std::domain_error("squarefree_signed: argument must be nonzero");
    u64 mag = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
    u64 kernel = 1;
    for (auto [p, e] : factorize(mag)) {
        if (e & 1) kernel *= p;
    }
    return n < 0 ? -static_cast<i64>(kernel) : static_cast<i64>(kernel);
}

Int squarefree_kernel_coprime(u64 x, u64 y) {
    Int kernel = 1;
    for (u64 v : {x, y}) {
        for (auto [p, e] : factorize(v)) {
            if (e & 1) kernel *= p;
        }
    }
    return kernel;
}

Int quad_discriminant(i64 num, u64 den) {
    if (num == 0) throw std::domain_error("quad_discriminant: zero argument");
    u64 mag = num < 0 ? static_cast<u64>(-(num + 1)) + 1 : static_cast<u64>(num);
    if (std::gcd(mag, den) != 1)
        throw std::domain_error("quad_discriminant: fraction not in lowest terms");
    Int s = squarefree_kernel_coprime(mag, den);
    if (num < 0) s = -s;
    if (s == 1) throw std::domain_error("quad_discriminant: argument is a perfect square");
    // s = 1 (mod 4) is a field discriminant already; otherwise 4s.
    Int mod4 = ((s % 4) + 4) % 4;
    return mod4 == 1 ? s : 4 * s;
}

Int quad_discriminant(const Rat& q) {
    Int num = rat_num(q), den = rat_den(q);
    if (num < std::numeric_limits<i64>::min() || num > std::numeric_limits<i64>::max() ||
        den > std::numeric_limits<i64>::max())
        throw std::domain_error("quad_discriminant: argument out of supported range");
    return quad_discriminant(static_cast<i64>(num), static_cast<u64>(den));
}

int kronecker(const Int& D, const Int& n_in) {
    if (n_in < 1) throw std::domain_error("kronecker: n must be >= 1");
    Int n = n_in;
    int result = 1;
    // Split off the even part of n; (D/2) = 0, 1, -1 for D even, D = +-1 (8), D = +-3 (8).
    if ((n & 1) == 0) {
        if ((D & 1) == 0) return 0;
        unsigned e = v2(n);
        n >>= e;
        if (e & 1) {
            Int d8 = ((D % 8) + 8) % 8;
            if (d8 == 3 || d8 == 5) result = -result;
        }
    }
    // Jacobi symbol (D/n) for odd n >= 1.
    Int a = ((D % n) + n) % n;
    while (a != 0) {
        unsigned e = v2(a);
        a >>= e;
        if (e & 1) {
            Int n8 = n % 8;
            if (n8 == 3 || n8 == 5) result = -result;
        }
        if ((a % 4) == 3 && (n % 4) == 3) result = -result;
        std::swap(a, n);
        a %= n;
    }
    return n == 1 ? result : 0;
}

int kronecker(const Int& D, u64 n) { return kronecker(D, Int(n)); }

PowerDecomposition perfect_power_decompose(u64 num, u64 den) {
    if (num == 0 || den == 0) throw std::domain_error("perfect_power_decompose: zero argument");
    if (std::gcd(num, den) != 1)
        throw std::domain_error("perfect_power_decompose: fraction not in lowest terms");
    if (num == den)
        throw std::domain_error("perfect_power_decompose: degenerate ratio 1 (a = b excluded)");

    auto fn = factorize(num);
    auto fd = factorize(den);
    unsigned h = 0;
    for (auto [p, e] : fn) h = std::gcd(h, e);
    for (auto [p, e] : fd) h = std::gcd(h, e);

    u64 r0_num = 1, r0_den = 1;
    for (auto [p, e] : fn)
        for (unsigned i = 0; i < e / h; ++i) r0_num *= p;
    for (auto [p, e] : fd)
        for (unsigned i = 0; i < e / h; ++i) r0_den *= p;

    unsigned lambda = v2(static_cast<u64>(h));
    return PowerDecomposition{r0_num, r0_den, h, lambda, h >> lambda};
}

}  // namespace seqdiv
