#include "seqdiv/extremal.hpp"

#include <numeric>
#include <sstream>

#include "seqdiv/empirical.hpp"
#include "seqdiv/sieve.hpp"

namespace seqdiv {

std::string extremal_kind_name(ExtremalKind k) {
    switch (k) {
        case ExtremalKind::Zero: return "Zero";
        case ExtremalKind::Full: return "Full";
        case ExtremalKind::Intermediate: return "Intermediate";
    }
    throw internal_error("extremal_kind_name: bad kind");
}

ExtremalClass classify_extremal(const Params& p) {
    bool disc_divides = Int(p.d) % p.D_r0 == 0;
    int sym = disc_divides ? kronecker(p.D_r0, p.c) : 0;

    std::ostringstream cert;
    cert << "lambda=" << p.lambda << " gamma=" << p.gamma.str() << " delta=" << p.delta
         << " D(r0)=" << p.D_r0 << (disc_divides ? " | " : " !| ") << p.d;
    if (disc_divides) cert << " (D(r0)/c)=" << sym;

    ExtremalClass out;
    out.certificate = cert.str();

    ExtNat lambda(p.lambda), delta(p.delta);
    // a-i: lambda >= gamma and delta > gamma (gamma finite by the order).
    if (p.gamma <= lambda && p.gamma < delta) {
        out.kind = ExtremalKind::Zero;
        out.case_label = "a-i";
        return out;
    }
    // a-ii: lambda = gamma - 1, delta > gamma, D(r0) | d, (D(r0)/c) = 1.
    if (p.gamma == ExtNat(u64(p.lambda) + 1) && p.gamma < delta && disc_divides && sym == 1) {
        out.kind = ExtremalKind::Zero;
        out.case_label = "a-ii";
        return out;
    }
    // b-i: lambda = delta = 0, D(r0) | d, (D(r0)/c) = -1.
    if (p.lambda == 0 && p.delta == 0 && disc_divides && sym == -1) {
        out.kind = ExtremalKind::Full;
        out.case_label = "b-i";
        return out;
    }
    // b-ii: min(gamma, delta) > lambda, D(r0) | d, (D(r0)/c) = -1.
    if (p.gamma > lambda && p.delta > p.lambda && disc_divides && sym == -1) {
        out.kind = ExtremalKind::Full;
        out.case_label = "b-ii";
        return out;
    }
    out.kind = ExtremalKind::Intermediate;
    out.case_label = "none";
    return out;
}

ExtremalClass classify_extremal(u64 a, u64 b, i64 c, u64 d) {
    return classify_extremal(extract_params(a, b, c, d));
}

TauParityWitness tau_p_parity_witness(u64 p, u64 a, u64 b) {
    if (!is_prime_u64(p)) throw std::domain_error("tau_p_parity_witness: p is not prime");
    if (p == 2 || a % p == 0 || b % p == 0)
        throw std::domain_error("tau_p_parity_witness: p divides 2ab");
    Params params = extract_params(a, b, 1, 1);

    TauParityWitness w;
    w.tau_p = (p - 1) / std::gcd(p - 1, static_cast<u64>(params.h));
    w.v2_tau = v2(w.tau_p);
    w.tau_odd = w.v2_tau == 0;
    w.two_exact = w.v2_tau == 1;
    w.symbol = kronecker(params.D_r0, p);
    return w;
}

std::vector<u64> extremal_exceptions(const Params& p, ExtremalKind kind, u64 limit) {
    std::vector<u64> bad;
    if (kind == ExtremalKind::Intermediate) return bad;
    u64 target = p.c % p.d;
    for_each_prime(limit, [&](u64 q) {
        if (q % p.d != target) return;
        if (p.a % q == 0 || p.b % q == 0 || q == 2) return;  // q | 2ab
        bool div = divides_sequence(q, p.a, p.b);
        if (kind == ExtremalKind::Zero ? div : !div) bad.push_back(q);
    });
    return bad;
}

}  // namespace seqdiv
