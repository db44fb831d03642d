#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace seqdiv {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Arbitrary-precision integer and rational. cpp_rational keeps the canonical
// form we rely on everywhere: lowest terms, positive denominator, structural
// equality after reduction.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// 2^e as an exact rational, e may be negative.
inline Rat pow2_rat(long e) {
    Int one = 1;
    if (e >= 0) return Rat(one << e, 1);
    return Rat(one, one << (-e));
}

// "p/q" in lowest terms, or just "p" when q == 1.
std::string rat_str(const Rat& r);

double rat_double(const Rat& r);

// True iff the reduced denominator is 2^m or 3*2^m. Every phi(d)*density
// produced by the tables and the series has this shape.
bool has_dyadic_or_triadic_denominator(const Rat& r);

}  // namespace seqdiv
