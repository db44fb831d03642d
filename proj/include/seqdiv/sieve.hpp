#pragma once

#include <functional>
#include <vector>

#include "seqdiv/rational.hpp"

namespace seqdiv {

// Progress reporting for long sieve runs: (primes seen so far, segments done,
// segments total). Invoked under a lock, at segment granularity.
using ProgressFn = std::function<void(u64 primes_done, u64 segments_done, u64 segments_total)>;

// All primes <= limit by a plain sieve of Eratosthenes.
std::vector<u32> small_primes(u32 limit);

u64 isqrt_u64(u64 n);

// Serial segmented iteration over all primes <= limit, ascending.
void for_each_prime(u64 limit, const std::function<void(u64)>& fn);

// Unbounded ascending iteration; stops when fn returns false.
void for_each_prime_until(const std::function<bool(u64)>& fn);

// Parallel segmented iteration over all primes <= limit. Workers claim
// disjoint segments from a shared counter; visit(worker, p) sees each
// segment's primes in ascending order, but segments interleave across
// workers, so per-worker state must be combined by a commutative reduction
// for the overall result to be thread-count independent.
void for_each_prime_parallel(u64 limit, unsigned threads,
                             const std::function<void(unsigned worker, u64 p)>& visit,
                             const ProgressFn& progress = {});

}  // namespace seqdiv
