#include "seqdiv/empirical.hpp"

#include <array>
#include <numeric>

namespace seqdiv {

namespace {

constexpr u64 kMaxSieveLimit = u64(1) << 40;  // desk scale; keeps base primes in u32

// Core test, p known prime.
bool divides_sequence_unchecked(u64 p, u64 a, u64 b) {
    if (std::gcd(a, b) % p == 0) return true;  // p divides every term
    u64 ap = a % p, bp = b % p;
    if (ap == 0 || bp == 0) return false;  // p divides exactly one of a, b
    if (p == 2) return true;               // a, b both odd: 2 | a + b
    u64 m = (p - 1) >> v2(p - 1);
    u64 x = powmod(ap, m, p);
    u64 y = bp == 1 ? 1 : powmod(bp, m, p);
    return x != y;  // ord_p(a/b) even iff (a/b)^m != 1
}

void validate_ab(u64 a, u64 b) {
    if (a < 1 || b < 1) throw std::domain_error("a, b must be positive");
}

}  // namespace

bool divides_sequence(u64 p, u64 a, u64 b) {
    validate_ab(a, b);
    if (!is_prime_u64(p)) throw std::domain_error("divides_sequence: p is not prime");
    return divides_sequence_unchecked(p, a, b);
}

bool divides_sequence_prime(u64 p, u64 a, u64 b) { return divides_sequence_unchecked(p, a, b); }

unsigned two_adic_index_class(u64 p, u64 a, u64 b) {
    validate_ab(a, b);
    if (!is_prime_u64(p)) throw std::domain_error("two_adic_index_class: p is not prime");
    if (a % p == 0 || b % p == 0)
        throw std::domain_error("two_adic_index_class: p divides a*b");
    if (p == 2) return 1;  // ord = 1, index = 1
    unsigned v = v2(p - 1);
    u64 m = (p - 1) >> v;
    u64 x = powmod(a % p, m, p);
    u64 y = powmod(b % p, m, p);
    // v2(ord) = least e with (a/b)^(m*2^e) = 1, i.e. a^(m*2^e) = b^(m*2^e).
    unsigned e = 0;
    while (x != y) {
        x = mulmod(x, x, p);
        y = mulmod(y, y, p);
        ++e;
    }
    return v - e + 1;
}

EmpiricalCount count_up_to(u64 a, u64 b, i64 c, u64 d, u64 x_limit, unsigned threads,
                           const ProgressFn& progress) {
    Params p = extract_params(a, b, c, d);  // validates and canonicalizes
    if (x_limit < 2 || x_limit > kMaxSieveLimit)
        throw std::domain_error("count_up_to: x_limit out of range");
    if (threads == 0) threads = 1;

    u64 target = p.c % d;
    std::vector<std::array<u64, 2>> partial(threads, {0, 0});
    for_each_prime_parallel(
        x_limit, threads,
        [&](unsigned w, u64 q) {
            if (q % d != target) return;
            ++partial[w][0];
            if (divides_sequence_unchecked(q, a, b)) ++partial[w][1];
        },
        progress);

    EmpiricalCount out;
    out.x_limit = x_limit;
    out.a = a;
    out.b = b;
    out.c = p.c;
    out.d = d;
    for (auto& [t, v] : partial) {
        out.total += t;
        out.dividing += v;
    }
    return out;
}

std::vector<EmpiricalCount> scan_classes(u64 a, u64 b, u64 d, u64 x_limit, unsigned threads,
                                         const ProgressFn& progress) {
    validate_ab(a, b);
    if (a == b) throw std::domain_error("scan_classes: degenerate ratio a = b");
    if (d < 1 || d > 1000000)
        throw std::domain_error("scan_classes: d must be in [1, 1e6]");
    if (x_limit < 2 || x_limit > kMaxSieveLimit)
        throw std::domain_error("scan_classes: x_limit out of range");
    if (threads == 0) threads = 1;

    struct PerClass {
        std::vector<u64> total, dividing;
    };
    std::vector<PerClass> partial(threads);
    for (auto& pc : partial) {
        pc.total.assign(d, 0);
        pc.dividing.assign(d, 0);
    }
    for_each_prime_parallel(
        x_limit, threads,
        [&](unsigned w, u64 q) {
            u64 r = q % d;
            if (std::gcd(r, d) != 1) return;  // q | d: in no invertible class
            ++partial[w].total[r];
            if (divides_sequence_unchecked(q, a, b)) ++partial[w].dividing[r];
        },
        progress);

    std::vector<EmpiricalCount> out;
    for (u64 r = 0; r < d; ++r) {
        if (std::gcd(r, d) != 1 && d != 1) continue;
        EmpiricalCount ec;
        ec.x_limit = x_limit;
        ec.a = a;
        ec.b = b;
        ec.c = r == 0 ? d : r;  // canonical representative in [1, d]
        ec.d = d;
        for (auto& pc : partial) {
            ec.total += pc.total[r];
            ec.dividing += pc.dividing[r];
        }
        out.push_back(ec);
    }
    return out;
}

FermatConjecture parse_conjecture(const std::string& s) {
    if (s == "1.2") return FermatConjecture::C1_2;
    if (s == "1.3") return FermatConjecture::C1_3;
    if (s == "1.4") return FermatConjecture::C1_4;
    if (s == "1.1")
        throw std::domain_error(
            "conjecture 1.1 is a theorem (quadratic reciprocity); it has no counterexamples");
    throw std::domain_error("unknown conjecture '" + s + "' (expected 1.2, 1.3 or 1.4)");
}

FermatBinding fermat_binding(FermatConjecture which) {
    // Bound to the classes that reproduce the published counterexample lists:
    // 1.3's list (41, 61, 241, ...) sits in +1 (mod 10), 1.4's (29, 89, ...)
    // in 9 (mod 10).
    switch (which) {
        case FermatConjecture::C1_2: return {3, 1, 1, 12};
        case FermatConjecture::C1_3: return {5, 1, 1, 10};
        case FermatConjecture::C1_4: return {5, 1, 9, 10};
    }
    throw internal_error("fermat_binding: bad conjecture");
}

std::vector<u64> fermat_counterexamples(FermatConjecture which, size_t limit) {
    FermatBinding bind = fermat_binding(which);
    std::vector<u64> out;
    if (limit == 0) return out;
    for_each_prime_until([&](u64 p) {
        if (p % bind.d == bind.c && divides_sequence_unchecked(p, bind.a, bind.b))
            out.push_back(p);
        return out.size() < limit;
    });
    return out;
}

}  // namespace seqdiv
