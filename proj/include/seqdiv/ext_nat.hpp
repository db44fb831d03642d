#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include "seqdiv/rational.hpp"

namespace seqdiv {

// Natural number extended with a single infinite element. Used for the
// 2-adic valuation of c-1, which is "larger than any number" when c = 1.
// Total order: Finite(m) < Finite(n) iff m < n; Finite(n) < Infinity.
class ExtNat {
public:
    constexpr ExtNat(u64 v) : inf_(false), v_(v) {}  // NOLINT: implicit on purpose
    static constexpr ExtNat infinity() { return ExtNat(true, 0); }

    constexpr bool is_finite() const { return !inf_; }
    u64 value() const {
        if (inf_) throw std::domain_error("ExtNat: value() of infinity");
        return v_;
    }

    friend constexpr bool operator==(ExtNat x, ExtNat y) {
        return x.inf_ == y.inf_ && (x.inf_ || x.v_ == y.v_);
    }
    friend constexpr std::strong_ordering operator<=>(ExtNat x, ExtNat y) {
        if (x.inf_ && y.inf_) return std::strong_ordering::equal;
        if (x.inf_) return std::strong_ordering::greater;
        if (y.inf_) return std::strong_ordering::less;
        return x.v_ <=> y.v_;
    }

    // min(*this, n) collapsed to a plain integer.
    constexpr u64 min_with(u64 n) const { return (inf_ || v_ > n) ? n : v_; }

    std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

private:
    constexpr ExtNat(bool inf, u64 v) : inf_(inf), v_(v) {}
    bool inf_;
    u64 v_;
};

}  // namespace seqdiv
