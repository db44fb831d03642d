#include "seqdiv/tables.hpp"

#include <algorithm>
#include <mutex>

namespace seqdiv {

namespace {

// Everything a row predicate or formula may consult. sym is the Kronecker
// symbol (D(r0)/c) for Table 2, (D(t)/c) for Table 3; c8 = c mod 8 is read
// only by Table 6.
struct RowCtx {
    long lambda = 0;
    long delta = 0;
    long delta0 = 0;
    ExtNat gamma = ExtNat(0);
    int sym = 0;
    unsigned c8 = 1;
};

struct TableRow {
    const char* id;
    const char* cond;
    const char* value;
    bool (*pred)(const RowCtx&);
    Rat (*formula)(const RowCtx&);
};

ExtNat ext(long n) { return ExtNat(static_cast<u64>(n)); }

Rat third(long e) { return pow2_rat(e) / 3; }

// Table 1: Q(sqrt(r0)) != Q(sqrt(2)), D' does not divide d'.
const std::vector<TableRow>& table1() {
    static const std::vector<TableRow> rows = {
        {"T1.1", "lambda < delta, delta <= gamma", "1 - 2^(lambda+1-delta)/3",
         [](const RowCtx& x) { return x.lambda < x.delta && x.gamma >= ext(x.delta); },
         [](const RowCtx& x) { return 1 - third(x.lambda + 1 - x.delta); }},
        {"T1.2", "0 < delta <= min(lambda, gamma)", "2^(delta-lambda)/3",
         [](const RowCtx& x) {
             return x.delta > 0 && x.delta <= x.lambda && x.gamma >= ext(x.delta);
         },
         [](const RowCtx& x) { return third(x.delta - x.lambda); }},
        {"T1.3", "delta = 0", "2^(1-lambda)/3",
         [](const RowCtx& x) { return x.delta == 0; },
         [](const RowCtx& x) { return third(1 - x.lambda); }},
        {"T1.4", "lambda >= gamma, delta > gamma", "0",
         [](const RowCtx& x) { return x.gamma <= ext(x.lambda) && x.gamma < ext(x.delta); },
         [](const RowCtx&) { return Rat(0); }},
        {"T1.5", "lambda < gamma, delta > gamma", "1 - 2^(lambda-gamma)",
         [](const RowCtx& x) { return x.gamma > ext(x.lambda) && x.gamma < ext(x.delta); },
         [](const RowCtx& x) {
             return 1 - pow2_rat(x.lambda - static_cast<long>(x.gamma.value()));
         }},
    };
    return rows;
}

// Table 2: Q(sqrt(r0)) != Q(sqrt(2)), D' | d', delta0 <= delta. sym = (D(r0)/c).
const std::vector<TableRow>& table2() {
    static const std::vector<TableRow> rows = {
        {"T2.1", "lambda >= delta-1, 0 < delta <= gamma, sym = 1", "2^(delta-1-lambda)/3",
         [](const RowCtx& x) {
             return x.lambda >= x.delta - 1 && x.delta > 0 && x.gamma >= ext(x.delta) &&
                    x.sym == 1;
         },
         [](const RowCtx& x) { return third(x.delta - 1 - x.lambda); }},
        {"T2.2", "lambda >= delta-1, 0 < delta <= gamma, sym = -1", "2^(delta-1-lambda)",
         [](const RowCtx& x) {
             return x.lambda >= x.delta - 1 && x.delta > 0 && x.gamma >= ext(x.delta) &&
                    x.sym == -1;
         },
         [](const RowCtx& x) { return pow2_rat(x.delta - 1 - x.lambda); }},
        {"T2.3", "delta = 0, sym = 1", "2^(-lambda)/3",
         [](const RowCtx& x) { return x.delta == 0 && x.sym == 1; },
         [](const RowCtx& x) { return third(-x.lambda); }},
        {"T2.4", "delta = 0, sym = -1", "2^(-lambda)",
         [](const RowCtx& x) { return x.delta == 0 && x.sym == -1; },
         [](const RowCtx& x) { return pow2_rat(-x.lambda); }},
        {"T2.5", "lambda < delta-1, delta <= gamma, sym = 1", "1 - 2^(lambda+2-delta)/3",
         [](const RowCtx& x) {
             return x.lambda < x.delta - 1 && x.gamma >= ext(x.delta) && x.sym == 1;
         },
         [](const RowCtx& x) { return 1 - third(x.lambda + 2 - x.delta); }},
        {"T2.6", "lambda < delta-1, delta <= gamma, sym = -1", "1",
         [](const RowCtx& x) {
             return x.lambda < x.delta - 1 && x.gamma >= ext(x.delta) && x.sym == -1;
         },
         [](const RowCtx&) { return Rat(1); }},
        {"T2.7", "lambda >= delta, delta > gamma", "0",
         [](const RowCtx& x) { return x.lambda >= x.delta && x.gamma < ext(x.delta); },
         [](const RowCtx&) { return Rat(0); }},
        {"T2.8", "lambda <= gamma-1, delta > gamma, sym = 1", "1 - 2^(lambda+1-gamma)",
         [](const RowCtx& x) {
             return x.gamma >= ext(x.lambda + 1) && x.gamma < ext(x.delta) && x.sym == 1;
         },
         [](const RowCtx& x) {
             return 1 - pow2_rat(x.lambda + 1 - static_cast<long>(x.gamma.value()));
         }},
        {"T2.9", "lambda <= gamma-1, delta > gamma, sym = -1", "1",
         [](const RowCtx& x) {
             return x.gamma >= ext(x.lambda + 1) && x.gamma < ext(x.delta) && x.sym == -1;
         },
         [](const RowCtx&) { return Rat(1); }},
        {"T2.10", "lambda >= gamma, delta > lambda", "0",
         [](const RowCtx& x) { return x.gamma <= ext(x.lambda) && x.delta > x.lambda; },
         [](const RowCtx&) { return Rat(0); }},
    };
    return rows;
}

// Table 3: Q(sqrt(r0)) != Q(sqrt(2)), D' | d', delta0 > delta. sym = (D(t)/c).
const std::vector<TableRow>& table3() {
    static const std::vector<TableRow> rows = {
        {"T3.1", "lambda < delta-1, delta <= gamma, sym = 1",
         "1 - 2^(lambda+1-delta)/3 + 2^(lambda+2+delta-2*delta0)/3",
         [](const RowCtx& x) {
             return x.lambda < x.delta - 1 && x.gamma >= ext(x.delta) && x.sym == 1;
         },
         [](const RowCtx& x) {
             return 1 - third(x.lambda + 1 - x.delta) + third(x.lambda + 2 + x.delta - 2 * x.delta0);
         }},
        {"T3.2", "lambda < delta-1, delta <= gamma, sym = -1",
         "1 - 2^(lambda+1-delta)/3 - 2^(lambda+2+delta-2*delta0)/3",
         [](const RowCtx& x) {
             return x.lambda < x.delta - 1 && x.gamma >= ext(x.delta) && x.sym == -1;
         },
         [](const RowCtx& x) {
             return 1 - third(x.lambda + 1 - x.delta) - third(x.lambda + 2 + x.delta - 2 * x.delta0);
         }},
        {"T3.3", "lambda = delta-1, delta <= gamma, sym = 1", "2/3 + 2^(2*delta+1-2*delta0)/3",
         [](const RowCtx& x) {
             return x.lambda == x.delta - 1 && x.gamma >= ext(x.delta) && x.sym == 1;
         },
         [](const RowCtx& x) { return Rat(2, 3) + third(2 * x.delta + 1 - 2 * x.delta0); }},
        {"T3.4", "lambda = delta-1, delta <= gamma, sym = -1", "2/3 - 2^(2*delta+1-2*delta0)/3",
         [](const RowCtx& x) {
             return x.lambda == x.delta - 1 && x.gamma >= ext(x.delta) && x.sym == -1;
         },
         [](const RowCtx& x) { return Rat(2, 3) - third(2 * x.delta + 1 - 2 * x.delta0); }},
        {"T3.5", "lambda <= gamma-1, delta > gamma", "1 - 2^(lambda-gamma)",
         [](const RowCtx& x) { return x.gamma >= ext(x.lambda + 1) && x.gamma < ext(x.delta); },
         [](const RowCtx& x) {
             return 1 - pow2_rat(x.lambda - static_cast<long>(x.gamma.value()));
         }},
        {"T3.6", "lambda >= gamma, delta > lambda", "0",
         [](const RowCtx& x) { return x.gamma <= ext(x.lambda) && x.delta > x.lambda; },
         [](const RowCtx&) { return Rat(0); }},
        {"T3.7", "lambda >= delta, delta > gamma", "0",
         [](const RowCtx& x) { return x.lambda >= x.delta && x.gamma < ext(x.delta); },
         [](const RowCtx&) { return Rat(0); }},
        {"T3.8", "lambda <= delta0-2, 0 < delta <= min(gamma, lambda), sym = 1",
         "2^(delta-lambda)/3 + 2^(lambda+2+delta-2*delta0)/3",
         [](const RowCtx& x) {
             return x.lambda <= x.delta0 - 2 && x.delta > 0 && x.delta <= x.lambda &&
                    x.gamma >= ext(x.delta) && x.sym == 1;
         },
         [](const RowCtx& x) {
             return third(x.delta - x.lambda) + third(x.lambda + 2 + x.delta - 2 * x.delta0);
         }},
        {"T3.9", "lambda <= delta0-2, 0 < delta <= min(gamma, lambda), sym = -1",
         "2^(delta-lambda)/3 - 2^(lambda+2+delta-2*delta0)/3",
         [](const RowCtx& x) {
             return x.lambda <= x.delta0 - 2 && x.delta > 0 && x.delta <= x.lambda &&
                    x.gamma >= ext(x.delta) && x.sym == -1;
         },
         [](const RowCtx& x) {
             return third(x.delta - x.lambda) - third(x.lambda + 2 + x.delta - 2 * x.delta0);
         }},
        {"T3.10", "lambda >= delta0-1, 0 < delta <= gamma, sym = 1", "2^(delta-1-lambda)/3",
         [](const RowCtx& x) {
             return x.lambda >= x.delta0 - 1 && x.delta > 0 && x.gamma >= ext(x.delta) &&
                    x.sym == 1;
         },
         [](const RowCtx& x) { return third(x.delta - 1 - x.lambda); }},
        {"T3.11", "lambda >= delta0-1, 0 < delta <= gamma, sym = -1", "2^(delta-lambda-1)",
         [](const RowCtx& x) {
             return x.lambda >= x.delta0 - 1 && x.delta > 0 && x.gamma >= ext(x.delta) &&
                    x.sym == -1;
         },
         [](const RowCtx& x) { return pow2_rat(x.delta - x.lambda - 1); }},
        {"T3.12", "lambda <= delta0-2, delta = 0, sym = 1",
         "2^(1-lambda)/3 + 2^(lambda+3-2*delta0)/3",
         [](const RowCtx& x) { return x.lambda <= x.delta0 - 2 && x.delta == 0 && x.sym == 1; },
         [](const RowCtx& x) { return third(1 - x.lambda) + third(x.lambda + 3 - 2 * x.delta0); }},
        {"T3.13", "lambda <= delta0-2, delta = 0, sym = -1",
         "2^(1-lambda)/3 - 2^(lambda+3-2*delta0)/3",
         [](const RowCtx& x) { return x.lambda <= x.delta0 - 2 && x.delta == 0 && x.sym == -1; },
         [](const RowCtx& x) { return third(1 - x.lambda) - third(x.lambda + 3 - 2 * x.delta0); }},
        {"T3.14", "lambda >= delta0-1, delta = 0, sym = 1", "2^(-lambda)/3",
         [](const RowCtx& x) { return x.lambda >= x.delta0 - 1 && x.delta == 0 && x.sym == 1; },
         [](const RowCtx& x) { return third(-x.lambda); }},
        {"T3.15", "lambda >= delta0-1, delta = 0, sym = -1", "2^(-lambda)",
         [](const RowCtx& x) { return x.lambda >= x.delta0 - 1 && x.delta == 0 && x.sym == -1; },
         [](const RowCtx& x) { return pow2_rat(-x.lambda); }},
    };
    return rows;
}

// Table 4: Q(sqrt(r0)) = Q(sqrt(2)), delta <= 2.
const std::vector<TableRow>& table4() {
    static const std::vector<TableRow> rows = {
        {"T4.1", "lambda = 0, delta <= 1, gamma >= delta", "17/24",
         [](const RowCtx& x) {
             return x.lambda == 0 && x.delta <= 1 && x.gamma >= ext(x.delta);
         },
         [](const RowCtx&) { return Rat(17, 24); }},
        {"T4.2", "lambda = 0, delta = 2, gamma >= delta", "11/12",
         [](const RowCtx& x) {
             return x.lambda == 0 && x.delta == 2 && x.gamma >= ext(x.delta);
         },
         [](const RowCtx&) { return Rat(11, 12); }},
        {"T4.3", "lambda = 0, delta = 2, gamma = 1", "1/2",
         [](const RowCtx& x) { return x.lambda == 0 && x.delta == 2 && x.gamma == ext(1); },
         [](const RowCtx&) { return Rat(1, 2); }},
        {"T4.4", "lambda = 1, delta = 2, gamma = 1", "0",
         [](const RowCtx& x) { return x.lambda == 1 && x.delta == 2 && x.gamma == ext(1); },
         [](const RowCtx&) { return Rat(0); }},
        {"T4.5", "lambda = 1, delta <= 1, gamma >= delta", "5/12",
         [](const RowCtx& x) {
             return x.lambda == 1 && x.delta <= 1 && x.gamma >= ext(x.delta);
         },
         [](const RowCtx&) { return Rat(5, 12); }},
        {"T4.6", "lambda = 1, delta = 2, gamma >= delta", "5/6",
         [](const RowCtx& x) {
             return x.lambda == 1 && x.delta == 2 && x.gamma >= ext(x.delta);
         },
         [](const RowCtx&) { return Rat(5, 6); }},
        {"T4.7", "lambda >= 2, delta <= 1, gamma >= delta", "2^(-lambda)/3",
         [](const RowCtx& x) {
             return x.lambda >= 2 && x.delta <= 1 && x.gamma >= ext(x.delta);
         },
         [](const RowCtx& x) { return third(-x.lambda); }},
        {"T4.8", "lambda >= 2, delta = 2, gamma >= delta", "2^(1-lambda)/3",
         [](const RowCtx& x) {
             return x.lambda >= 2 && x.delta == 2 && x.gamma >= ext(x.delta);
         },
         [](const RowCtx& x) { return third(1 - x.lambda); }},
        {"T4.9", "lambda >= 2, delta = 2, gamma = 1", "0",
         [](const RowCtx& x) { return x.lambda >= 2 && x.delta == 2 && x.gamma == ext(1); },
         [](const RowCtx&) { return Rat(0); }},
    };
    return rows;
}

// Table 5: Q(sqrt(r0)) = Q(sqrt(2)), delta >= 3, lambda > 0.
const std::vector<TableRow>& table5() {
    static const std::vector<TableRow> rows = {
        {"T5.1", "lambda >= 2, delta = 3, gamma < delta", "0",
         [](const RowCtx& x) { return x.lambda >= 2 && x.delta == 3 && x.gamma < ext(x.delta); },
         [](const RowCtx&) { return Rat(0); }},
        {"T5.2", "lambda >= delta-1, delta >= 3, gamma >= delta", "2^(delta-1-lambda)/3",
         [](const RowCtx& x) { return x.lambda >= x.delta - 1 && x.gamma >= ext(x.delta); },
         [](const RowCtx& x) { return third(x.delta - 1 - x.lambda); }},
        {"T5.3", "2 <= lambda < delta-1, delta >= 4, gamma >= delta", "1 - 2^(lambda+2-delta)/3",
         [](const RowCtx& x) {
             return x.lambda >= 2 && x.lambda < x.delta - 1 && x.delta >= 4 &&
                    x.gamma >= ext(x.delta);
         },
         [](const RowCtx& x) { return 1 - third(x.lambda + 2 - x.delta); }},
        {"T5.4", "2 <= lambda <= gamma-2, delta >= 4, gamma < delta", "1 - 2^(lambda+1-gamma)",
         [](const RowCtx& x) {
             return x.lambda >= 2 && x.gamma >= ext(x.lambda + 2) && x.delta >= 4 &&
                    x.gamma < ext(x.delta);
         },
         [](const RowCtx& x) {
             return 1 - pow2_rat(x.lambda + 1 - static_cast<long>(x.gamma.value()));
         }},
        {"T5.5", "lambda >= max(2, gamma-1), delta >= 4, gamma < delta", "0",
         [](const RowCtx& x) {
             return x.lambda >= 2 && x.gamma <= ext(x.lambda + 1) && x.delta >= 4 &&
                    x.gamma < ext(x.delta);
         },
         [](const RowCtx&) { return Rat(0); }},
        {"T5.6", "lambda = 1, delta >= 3, gamma >= delta", "1 - 2^(3-delta)/3",
         [](const RowCtx& x) { return x.lambda == 1 && x.gamma >= ext(x.delta); },
         [](const RowCtx& x) { return 1 - third(3 - x.delta); }},
        {"T5.7", "lambda = 1, delta >= 3, gamma = 1", "0",
         [](const RowCtx& x) { return x.lambda == 1 && x.gamma == ext(1); },
         [](const RowCtx&) { return Rat(0); }},
        {"T5.8", "lambda = 1, delta >= 3, gamma = 2", "1",
         [](const RowCtx& x) { return x.lambda == 1 && x.gamma == ext(2); },
         [](const RowCtx&) { return Rat(1); }},
        {"T5.9", "lambda = 1, delta >= 3, 3 < gamma < delta", "1 - 2^(2-gamma)",
         [](const RowCtx& x) {
             return x.lambda == 1 && x.gamma >= ext(4) && x.gamma < ext(x.delta);
         },
         [](const RowCtx& x) { return 1 - pow2_rat(2 - static_cast<long>(x.gamma.value())); }},
        // Cell missing from the printed table; value fixed by the series
        // route (consistent with extending T5.9 to gamma = 3).
        {"T5.gap", "lambda = 1, delta >= 4, gamma = 3", "1/2",
         [](const RowCtx& x) { return x.lambda == 1 && x.gamma == ext(3) && x.delta >= 4; },
         [](const RowCtx&) { return Rat(1, 2); }},
    };
    return rows;
}

// Table 6: Q(sqrt(r0)) = Q(sqrt(2)), delta >= 3, lambda = 0.
const std::vector<TableRow>& table6() {
    static const std::vector<TableRow> rows = {
        {"T6.1", "gamma >= delta, c = 1 (mod 8)", "1 - 2^(2-delta)/3",
         [](const RowCtx& x) { return x.gamma >= ext(x.delta) && x.c8 == 1; },
         [](const RowCtx& x) { return 1 - third(2 - x.delta); }},
        {"T6.2", "gamma <= 2, c = +-1 (mod 8)", "0",
         [](const RowCtx& x) {
             return x.gamma <= ext(2) && (x.c8 == 1 || x.c8 == 7);
         },
         [](const RowCtx&) { return Rat(0); }},
        {"T6.3", "gamma <= 2, c = +-3 (mod 8)", "1",
         [](const RowCtx& x) {
             return x.gamma <= ext(2) && (x.c8 == 3 || x.c8 == 5);
         },
         [](const RowCtx&) { return Rat(1); }},
        {"T6.4", "3 <= gamma < delta, c = 1 (mod 8)", "1 - 2^(1-gamma)",
         [](const RowCtx& x) {
             return x.gamma >= ext(3) && x.gamma < ext(x.delta) && x.c8 == 1;
         },
         [](const RowCtx& x) { return 1 - pow2_rat(1 - static_cast<long>(x.gamma.value())); }},
    };
    return rows;
}

const std::vector<TableRow>& rows_for(DensityCase t) {
    switch (t) {
        case DensityCase::T1: return table1();
        case DensityCase::T2: return table2();
        case DensityCase::T3: return table3();
        case DensityCase::T4: return table4();
        case DensityCase::T5: return table5();
        case DensityCase::T6: return table6();
    }
    throw internal_error("rows_for: bad DensityCase");
}

// Evaluate a context against a table: every matching row must agree.
std::pair<const TableRow*, Rat> match_row(DensityCase t, const RowCtx& ctx) {
    const TableRow* hit = nullptr;
    Rat value;
    for (const TableRow& row : rows_for(t)) {
        if (!row.pred(ctx)) continue;
        Rat v = row.formula(ctx);
        if (!hit) {
            hit = &row;
            value = v;
        } else if (v != value) {
            throw internal_error("table integrity: rows " + std::string(hit->id) + " and " +
                                 row.id + " disagree");
        }
    }
    if (!hit) throw internal_error("table integrity: no row matches in " + table_name(t));
    return {hit, value};
}

std::vector<ExtNat> coherent_gammas(long delta) {
    std::vector<ExtNat> gs;
    for (u64 g = delta >= 1 ? 1 : 0; g <= 12; ++g) gs.push_back(ExtNat(g));
    gs.push_back(ExtNat::infinity());
    return gs;
}

std::vector<unsigned> coherent_c8(ExtNat gamma) {
    if (gamma == ExtNat(1)) return {3, 7};
    if (gamma == ExtNat(2)) return {5};
    return {1};  // gamma >= 3 or infinite
}

void run_integrity_check() {
    RowCtx ctx;
    auto check = [](DensityCase t, const RowCtx& c) {
        auto [row, value] = match_row(t, c);
        if (value < 0 || value > 1)
            throw internal_error("table integrity: value outside [0,1] in row " +
                                 std::string(row->id));
        if (!has_dyadic_or_triadic_denominator(value))
            throw internal_error("table integrity: bad denominator in row " +
                                 std::string(row->id));
    };
    for (long lambda = 0; lambda <= 12; ++lambda) {
        ctx.lambda = lambda;
        // Tables 1-3 (generic regime), delta unrestricted.
        for (long delta = 0; delta <= 12; ++delta) {
            ctx.delta = delta;
            for (ExtNat gamma : coherent_gammas(delta)) {
                ctx.gamma = gamma;
                ctx.sym = 0;
                ctx.delta0 = 0;
                check(DensityCase::T1, ctx);
                for (int sym : {1, -1}) {
                    ctx.sym = sym;
                    check(DensityCase::T2, ctx);
                    for (long delta0 = std::max(delta + 1, 2l); delta0 <= 6; ++delta0) {
                        ctx.delta0 = delta0;
                        check(DensityCase::T3, ctx);
                    }
                }
            }
        }
        ctx.sym = 0;
        ctx.delta0 = 3;  // sqrt(2) regime always has D(r0) = 8
        // Table 4: delta <= 2.
        for (long delta = 0; delta <= 2; ++delta) {
            ctx.delta = delta;
            for (ExtNat gamma : coherent_gammas(delta)) {
                ctx.gamma = gamma;
                check(DensityCase::T4, ctx);
            }
        }
        // Tables 5/6: delta >= 3.
        for (long delta = 3; delta <= 12; ++delta) {
            ctx.delta = delta;
            for (ExtNat gamma : coherent_gammas(delta)) {
                ctx.gamma = gamma;
                if (lambda >= 1) {
                    check(DensityCase::T5, ctx);
                } else {
                    for (unsigned c8 : coherent_c8(gamma)) {
                        ctx.c8 = c8;
                        check(DensityCase::T6, ctx);
                    }
                }
            }
        }
    }
}

std::once_flag integrity_once;

void ensure_integrity_checked() {
    std::call_once(integrity_once, run_integrity_check);
}

}  // namespace

void check_table_integrity() { run_integrity_check(); }

Rat density_table0(u64 a, u64 b) {
    Params p = extract_params(a, b, 1, 1);
    if (!p.sqrt2_regime) return pow2_rat(1 - static_cast<long>(p.lambda)) / 3;
    if (p.lambda == 0) return Rat(17, 24);
    if (p.lambda == 1) return Rat(5, 12);
    return pow2_rat(-static_cast<long>(p.lambda)) / 3;
}

DensityResult density(const Params& p) {
    ensure_integrity_checked();
    DensityCase t = classify(p);

    RowCtx ctx;
    ctx.lambda = p.lambda;
    ctx.delta = p.delta;
    ctx.delta0 = p.delta0;
    ctx.gamma = p.gamma;
    ctx.c8 = static_cast<unsigned>(p.c % 8);
    if (t == DensityCase::T2)
        ctx.sym = kronecker(p.D_r0, p.c);
    else if (t == DensityCase::T3)
        ctx.sym = kronecker(p.D_t.value(), p.c);  // absent in the sqrt(2) regime

    auto [row, phi_d_density] = match_row(t, ctx);
    if (phi_d_density < 0 || phi_d_density > 1)
        throw internal_error("density: phi(d)*density outside [0,1]");
    if (!has_dyadic_or_triadic_denominator(phi_d_density))
        throw internal_error("density: denominator not of the form 2^m or 3*2^m");

    DensityResult result;
    result.phi_d_density = phi_d_density;
    result.density = phi_d_density / euler_phi(p.d);
    result.table = t;
    result.row = row->id;
    return result;
}

DensityResult density(u64 a, u64 b, i64 c, u64 d) {
    return density(extract_params(a, b, c, d));
}

Rat relative_density(u64 a, u64 b, i64 c, u64 d) {
    return density(a, b, c, d).density / density_table0(a, b);
}

std::vector<TableRowInfo> dump_tables() {
    std::vector<TableRowInfo> out;
    out.push_back({"T0", "T0.1", "L != Q(sqrt(2))", "2^(1-lambda)/3 (unconditional)"});
    out.push_back({"T0", "T0.2", "L = Q(sqrt(2)), lambda = 0", "17/24 (unconditional)"});
    out.push_back({"T0", "T0.3", "L = Q(sqrt(2)), lambda = 1", "5/12 (unconditional)"});
    out.push_back({"T0", "T0.4", "L = Q(sqrt(2)), lambda >= 2", "2^(-lambda)/3 (unconditional)"});
    for (DensityCase t : {DensityCase::T1, DensityCase::T2, DensityCase::T3, DensityCase::T4,
                          DensityCase::T5, DensityCase::T6}) {
        for (const TableRow& row : rows_for(t))
            out.push_back({table_name(t), row.id, row.cond, row.value});
    }
    return out;
}

}  // namespace seqdiv
