#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seqdiv/params.hpp"
#include "seqdiv/sieve.hpp"

namespace seqdiv {

// Exact per-class prime counts over [2, x_limit].
struct EmpiricalCount {
    u64 x_limit = 0;
    u64 a = 0, b = 0, c = 0, d = 0;
    u64 total = 0;     // primes p <= x_limit with p = c (mod d)
    u64 dividing = 0;  // those dividing {a^k + b^k}

    std::optional<double> ratio() const {
        if (total == 0) return std::nullopt;
        return static_cast<double>(dividing) / static_cast<double>(total);
    }
};

// p | {a^k + b^k} for some k >= 1. For p coprime to ab this is "ord_p(a/b)
// is even", tested through the odd part of p-1; p | gcd(a,b) divides every
// term; p | ab otherwise divides none. Validates primality of p
// (deterministic Miller-Rabin); throws std::domain_error otherwise.
bool divides_sequence(u64 p, u64 a, u64 b);

// Same test without the primality check, for callers holding sieve output.
bool divides_sequence_prime(u64 p, u64 a, u64 b);

// The unique j >= 1 with 2^(j-1) || (p-1)/ord_p(a/b). Requires p prime and
// p coprime to ab.
unsigned two_adic_index_class(u64 p, u64 a, u64 b);

// Exact counts over all primes p <= x_limit with p = c (mod d), via the
// segmented sieve. Result is independent of the worker count.
EmpiricalCount count_up_to(u64 a, u64 b, i64 c, u64 d, u64 x_limit, unsigned threads,
                           const ProgressFn& progress = {});

// One count per invertible class mod d, single sieve pass.
std::vector<EmpiricalCount> scan_classes(u64 a, u64 b, u64 d, u64 x_limit, unsigned threads,
                                         const ProgressFn& progress = {});

// Fermat's 1641 claims about primes dividing 3^k+1 and 5^k+1. 1.1 is a
// theorem; 1.2-1.4 are false with positive density, and each id is bound to
// the residue class whose counterexample list it names.
enum class FermatConjecture { C1_2, C1_3, C1_4 };

// Parses "1.2", "1.3", "1.4"; "1.1" raises (not falsifiable), anything else
// is invalid.
FermatConjecture parse_conjecture(const std::string& s);

// First `limit` counterexamples in ascending order.
std::vector<u64> fermat_counterexamples(FermatConjecture which, size_t limit);

// The (a, b, class, modulus) a conjecture id is bound to.
struct FermatBinding {
    u64 a, b, c, d;
};
FermatBinding fermat_binding(FermatConjecture which);

}  // namespace seqdiv
