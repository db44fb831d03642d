#include "seqdiv/sieve.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <mutex>
#include <thread>

namespace seqdiv {

namespace {

// Numbers covered per segment; 2^20 odd positions = 128 KiB of bits,
// cache-resident per worker.
constexpr u64 kSegmentSpan = u64(1) << 21;

// Marks odd composites in [lo, hi), lo odd, using odd base primes.
// bits[i] set <=> lo + 2i is composite.
void sieve_odd_segment(u64 lo, u64 hi, const std::vector<u32>& base, std::vector<u64>& bits) {
    u64 count = (hi - lo + 1) / 2;
    bits.assign((count + 63) / 64, 0);
    for (u32 p : base) {
        if (p == 2) continue;
        u64 pp = u64(p) * p;
        if (pp >= hi) break;
        u64 start = pp >= lo ? pp : ((lo + p - 1) / p) * u64(p);
        if ((start & 1) == 0) start += p;
        for (u64 m = start; m < hi; m += 2 * u64(p)) {
            u64 i = (m - lo) / 2;
            bits[i >> 6] |= u64(1) << (i & 63);
        }
    }
}

template <typename Visit>
void walk_segment(u64 lo, u64 hi, const std::vector<u64>& bits, Visit&& visit) {
    u64 count = (hi - lo + 1) / 2;
    for (u64 w = 0; w < bits.size(); ++w) {
        u64 word = ~bits[w];
        while (word != 0) {
            unsigned bit = static_cast<unsigned>(std::countr_zero(word));
            word &= word - 1;
            u64 i = (w << 6) + bit;
            if (i >= count) return;
            visit(lo + 2 * i);
        }
    }
}

}  // namespace

std::vector<u32> small_primes(u32 limit) {
    std::vector<u32> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i * i <= limit; ++i) {
        if (composite[i]) continue;
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    for (u32 i = 2; i <= limit; ++i) {
        if (!composite[i]) primes.push_back(i);
    }
    return primes;
}

u64 isqrt_u64(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

void for_each_prime(u64 limit, const std::function<void(u64)>& fn) {
    if (limit < 2) return;
    fn(2);
    if (limit < 3) return;
    auto base = small_primes(static_cast<u32>(isqrt_u64(limit)));
    std::vector<u64> bits;
    for (u64 lo = 3; lo <= limit; lo += kSegmentSpan) {
        u64 hi = std::min(limit, lo + kSegmentSpan - 1) + 1;
        sieve_odd_segment(lo, hi, base, bits);
        walk_segment(lo, hi, bits, fn);
    }
}

void for_each_prime_until(const std::function<bool(u64)>& fn) {
    if (!fn(2)) return;
    std::vector<u64> bits;
    for (u64 lo = 3;; lo += kSegmentSpan) {
        u64 hi = lo + kSegmentSpan;
        auto base = small_primes(static_cast<u32>(isqrt_u64(hi - 1)));
        sieve_odd_segment(lo, hi, base, bits);
        bool more = true;
        walk_segment(lo, hi, bits, [&](u64 p) {
            if (more) more = fn(p);
        });
        if (!more) return;
    }
}

void for_each_prime_parallel(u64 limit, unsigned threads,
                             const std::function<void(unsigned worker, u64 p)>& visit,
                             const ProgressFn& progress) {
    if (limit < 2) return;
    visit(0, 2);
    if (limit < 3) return;

    if (threads == 0) threads = 1;
    auto base = small_primes(static_cast<u32>(isqrt_u64(limit)));
    u64 segments = (limit - 3) / kSegmentSpan + 1;
    threads = static_cast<unsigned>(std::min<u64>(threads, segments));

    std::atomic<u64> next_segment{0};
    std::atomic<u64> primes_done{1};
    std::atomic<u64> segments_done{0};
    std::mutex progress_mutex;

    auto work = [&](unsigned worker) {
        std::vector<u64> bits;
        for (;;) {
            u64 s = next_segment.fetch_add(1);
            if (s >= segments) return;
            u64 lo = 3 + s * kSegmentSpan;
            u64 hi = std::min(limit, lo + kSegmentSpan - 1) + 1;
            sieve_odd_segment(lo, hi, base, bits);
            u64 seen = 0;
            walk_segment(lo, hi, bits, [&](u64 p) {
                visit(worker, p);
                ++seen;
            });
            u64 total_primes = primes_done.fetch_add(seen) + seen;
            u64 done = segments_done.fetch_add(1) + 1;
            if (progress) {
                std::lock_guard<std::mutex> lock(progress_mutex);
                progress(total_primes, done, segments);
            }
        }
    };

    if (threads == 1) {
        work(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
}

}  // namespace seqdiv
