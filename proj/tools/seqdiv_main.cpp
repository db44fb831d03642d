// seqdiv: exact densities of primes p = c (mod d) dividing a^k + b^k,
// with an empirical sieve to check them.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "seqdiv/report.hpp"
#include "seqdiv/selftest.hpp"
#include "seqdiv/series.hpp"

using namespace seqdiv;

namespace {

enum ExitCode { kOk = 0, kOutsideTolerance = 1, kInvalidInput = 2, kInternal = 3 };

unsigned default_threads() {
    if (const char* env = std::getenv("SEQDIV_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

std::string csv_escape(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// One CSV table from homogeneous records; column order fixed by the record.
void print_csv(const std::vector<nlohmann::json>& records, std::ostream& os) {
    if (records.empty()) return;
    bool first = true;
    for (auto& [key, value] : records.front().items()) {
        os << (first ? "" : ",") << key;
        first = false;
    }
    os << "\n";
    for (const auto& rec : records) {
        first = true;
        for (auto& [key, value] : rec.items()) {
            os << (first ? "" : ",") << csv_escape(value);
            first = false;
        }
        os << "\n";
    }
}

void emit(const std::string& format, const std::vector<nlohmann::json>& records,
          const std::function<void()>& text) {
    if (format == "json") {
        if (records.size() == 1)
            std::cout << records.front().dump(2) << "\n";
        else
            std::cout << nlohmann::json(records).dump(2) << "\n";
    } else if (format == "csv") {
        print_csv(records, std::cout);
    } else {
        text();
    }
}

ProgressFn stderr_progress(u64 x_limit) {
    if (x_limit < 10000000) return {};
    return [](u64 primes, u64 done, u64 total) {
        std::fprintf(stderr, "\r  sieving: %llu/%llu segments, %llu primes",
                     static_cast<unsigned long long>(done),
                     static_cast<unsigned long long>(total),
                     static_cast<unsigned long long>(primes));
        if (done == total) std::fprintf(stderr, "\n");
        std::fflush(stderr);
    };
}

struct GridSpec {
    u64 amax = 0, bmax = 0, dmax = 0;  // 0: use the default grid
};

Grid make_grid(const GridSpec& spec) {
    if (spec.amax == 0) return default_grid();
    Grid g;
    for (u64 a = 2; a <= spec.amax; ++a) g.a_values.push_back(a);
    for (u64 b = 1; b <= std::max<u64>(spec.bmax, 1); ++b) g.b_values.push_back(b);
    g.d_max = std::max<u64>(spec.dmax, 1);
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "seqdiv: density of primes p = c (mod d) dividing the sequence a^k + b^k.\n"
        "Exact rationals come from closed-form tables cross-checked against a\n"
        "field-degree series; 'verify' and 'scan' count real primes with a\n"
        "segmented sieve."};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    unsigned threads = default_threads();

    // --- density ---------------------------------------------------------
    auto* cmd_density = app.add_subcommand("density", "Exact density for one class");
    u64 da = 0, db = 0, dd = 0;
    i64 dc = 0;
    bool with_series = false;
    cmd_density->add_option("a", da, "a >= 1")->required();
    cmd_density->add_option("b", db, "b >= 1")->required();
    cmd_density->add_option("c", dc, "class representative, gcd(c, d) = 1")->required();
    cmd_density->add_option("d", dd, "modulus >= 1")->required();
    cmd_density->add_flag("--series", with_series,
                          "also evaluate the field-degree series and assert equality");

    // --- verify ----------------------------------------------------------
    auto* cmd_verify =
        app.add_subcommand("verify", "Compare the exact density against a sieve count");
    u64 va = 0, vb = 0, vd = 0;
    i64 vc = 0;
    std::string v_limit = "1e6";
    cmd_verify->add_option("a", va)->required();
    cmd_verify->add_option("b", vb)->required();
    cmd_verify->add_option("c", vc)->required();
    cmd_verify->add_option("d", vd)->required();
    cmd_verify->add_option("--limit", v_limit, "sieve bound x (accepts 1e8)")
        ->capture_default_str();
    cmd_verify->add_option("--threads", threads, "sieve workers (env SEQDIV_THREADS)");

    // --- scan ------------------------------------------------------------
    auto* cmd_scan = app.add_subcommand("scan", "Sieve counts for every class mod d");
    u64 sa = 0, sb = 0, sd = 0;
    std::string s_limit = "1e6";
    cmd_scan->add_option("a", sa)->required();
    cmd_scan->add_option("b", sb)->required();
    cmd_scan->add_option("d", sd)->required();
    cmd_scan->add_option("--limit", s_limit, "sieve bound x")->capture_default_str();
    cmd_scan->add_option("--threads", threads, "sieve workers");

    // --- fermat ----------------------------------------------------------
    auto* cmd_fermat =
        app.add_subcommand("fermat", "Counterexamples to Fermat's 1641 claims (1.2/1.3/1.4)");
    std::string conjecture;
    std::string f_limit = "13";
    cmd_fermat->add_option("conjecture", conjecture, "1.2, 1.3 or 1.4")->required();
    cmd_fermat->add_option("--limit", f_limit, "how many counterexamples")
        ->capture_default_str();

    // --- extremal --------------------------------------------------------
    auto* cmd_extremal =
        app.add_subcommand("extremal", "Classify a class as Zero / Full / Intermediate");
    u64 ea = 0, eb = 0, ed = 0;
    i64 ec = 0;
    std::string e_limit = "0";
    cmd_extremal->add_option("a", ea)->required();
    cmd_extremal->add_option("b", eb)->required();
    cmd_extremal->add_option("c", ec)->required();
    cmd_extremal->add_option("d", ed)->required();
    cmd_extremal->add_option("--limit", e_limit,
                             "also scan primes to this bound for exceptions (0 = skip)");

    // --- selftest ----------------------------------------------------------
    auto* cmd_selftest = app.add_subcommand(
        "selftest", "Cross-check tables vs series, class sums and extremal verdicts");
    GridSpec grid_spec;
    std::string grid_str;
    cmd_selftest->add_option("--grid", grid_str,
                             "grid as amax,bmax,dmax (default: built-in verification grid)");
    cmd_selftest->add_option("--threads", threads, "workers");

    // --- tables ------------------------------------------------------------
    auto* cmd_tables = app.add_subcommand("tables", "Dump every row of Tables 0-6");

    for (CLI::App* sub : {cmd_density, cmd_verify, cmd_scan, cmd_fermat, cmd_extremal,
                          cmd_selftest, cmd_tables})
        sub->fallthrough();

    app.footer(
        "Exit codes: 0 ok, 1 verification outside tolerance, 2 invalid input,\n"
        "3 internal consistency failure.\n\n"
        "CSV columns (--format csv):\n"
        "  density:  a,b,c,d,density,density_decimal,extremal,extremal_case,\n"
        "            phi_d_density,phi_d_density_decimal,row,table\n"
        "  verify:   a,b,c,d,deviation,dividing,exact,exact_decimal,ratio,tolerance,\n"
        "            total,within_tolerance,x\n"
        "  scan:     a,b,c,d,dividing,ratio,total,x\n"
        "Rationals are exact \"p/q\" strings; *_decimal fields are display-only.\n"
        "JSON record schemas are documented in docs/json_schema.md.");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        if (*cmd_density) {
            Params p = extract_params(da, db, dc, dd);
            DensityResult r = density(p);
            ExtremalClass ex = classify_extremal(p);
            nlohmann::json rec = density_record(p, r, ex);
            if (with_series) {
                Rat series = density_series(p);
                rec["series"] = rat_str(series);
                if (series != r.density)
                    throw internal_error("series evaluation disagrees with the table: " +
                                         rat_str(series) + " vs " + rat_str(r.density));
            }
            emit(format, {rec}, [&] {
                std::cout << "delta_{" << p.a << "," << p.b << "}(" << p.c << ", " << p.d
                          << ") = " << rat_str(r.density) << "  (~" << rat_double(r.density)
                          << ")\n"
                          << "phi(d) * delta = " << rat_str(r.phi_d_density) << "  (~"
                          << rat_double(r.phi_d_density) << ")\n"
                          << "table " << table_name(r.table) << ", row " << r.row << "\n"
                          << "extremal: " << extremal_kind_name(ex.kind)
                          << (ex.kind == ExtremalKind::Intermediate ? "" : " (case " +
                              ex.case_label + ")")
                          << "\n";
                if (with_series) std::cout << "series check: " << rat_str(r.density) << " ok\n";
            });
            return kOk;
        }

        if (*cmd_verify) {
            u64 x = parse_scaled_u64(v_limit);
            Params p = extract_params(va, vb, vc, vd);
            DensityResult exact = density(p);
            EmpiricalCount count = count_up_to(va, vb, vc, vd, x, threads, stderr_progress(x));
            double tol = verify_tolerance(exact.phi_d_density, count.total);
            nlohmann::json rec = verify_record(count, exact, tol);
            emit(format, {rec}, [&] {
                std::cout << "class " << count.c << " mod " << count.d << ", primes to " << x
                          << ": " << count.dividing << " / " << count.total << " divide";
                if (auto r = count.ratio()) std::cout << "  (ratio " << *r << ")";
                std::cout << "\nexact phi(d)*delta = " << rat_str(exact.phi_d_density) << "  (~"
                          << rat_double(exact.phi_d_density) << ")\n"
                          << "deviation " << rec["deviation"].get<double>() << ", tolerance "
                          << tol << " -> "
                          << (rec["within_tolerance"].get<bool>() ? "WITHIN" : "OUTSIDE")
                          << " tolerance\n";
            });
            return rec["within_tolerance"].get<bool>() ? kOk : kOutsideTolerance;
        }

        if (*cmd_scan) {
            u64 x = parse_scaled_u64(s_limit);
            auto counts = scan_classes(sa, sb, sd, x, threads, stderr_progress(x));
            std::vector<nlohmann::json> recs;
            for (const auto& c : counts) recs.push_back(count_record(c));
            emit(format, recs, [&] {
                for (const auto& c : counts) {
                    std::cout << "c = " << c.c << ": " << c.dividing << " / " << c.total;
                    if (auto r = c.ratio()) std::cout << "  (ratio " << *r << ")";
                    Rat exact = density(sa, sb, static_cast<i64>(c.c), sd).phi_d_density;
                    std::cout << "  exact " << rat_str(exact) << "\n";
                }
            });
            return kOk;
        }

        if (*cmd_fermat) {
            FermatConjecture which = parse_conjecture(conjecture);
            auto primes = fermat_counterexamples(which, parse_scaled_u64(f_limit));
            FermatBinding bind = fermat_binding(which);
            nlohmann::json rec{{"conjecture", conjecture},
                               {"a", bind.a},
                               {"b", bind.b},
                               {"c", bind.c},
                               {"d", bind.d},
                               {"counterexamples", primes}};
            emit(format, {rec}, [&] {
                std::cout << "counterexamples to conjecture " << conjecture << " (p = " << bind.c
                          << " mod " << bind.d << " dividing the " << bind.a << "^k + " << bind.b
                          << "^k sequence):\n";
                for (u64 p : primes) std::cout << p << "\n";
            });
            return kOk;
        }

        if (*cmd_extremal) {
            u64 scan_limit = parse_scaled_u64(e_limit);
            Params p = extract_params(ea, eb, ec, ed);
            ExtremalClass ex = classify_extremal(p);
            DensityResult r = density(p);
            nlohmann::json rec{{"a", p.a},
                               {"b", p.b},
                               {"c", p.c},
                               {"d", p.d},
                               {"kind", extremal_kind_name(ex.kind)},
                               {"case", ex.case_label},
                               {"certificate", ex.certificate},
                               {"density", rat_str(r.density)}};
            std::vector<u64> exceptions;
            if (scan_limit > 0 && ex.kind != ExtremalKind::Intermediate) {
                exceptions = extremal_exceptions(p, ex.kind, scan_limit);
                rec["exceptions"] = exceptions;
                rec["exception_scan_limit"] = scan_limit;
            }
            emit(format, {rec}, [&] {
                std::cout << extremal_kind_name(ex.kind);
                if (ex.kind != ExtremalKind::Intermediate) std::cout << " (case " << ex.case_label << ")";
                std::cout << "\ncertificate: " << ex.certificate << "\n"
                          << "density = " << rat_str(r.density) << "\n";
                if (scan_limit > 0 && ex.kind != ExtremalKind::Intermediate) {
                    std::cout << "exceptions to " << scan_limit << " (outside p | 2ab): ";
                    if (exceptions.empty())
                        std::cout << "none\n";
                    else {
                        for (u64 q : exceptions) std::cout << q << " ";
                        std::cout << "\n";
                    }
                }
            });
            return kOk;
        }

        if (*cmd_selftest) {
            if (!grid_str.empty()) {
                if (std::sscanf(grid_str.c_str(), "%llu,%llu,%llu",
                                reinterpret_cast<unsigned long long*>(&grid_spec.amax),
                                reinterpret_cast<unsigned long long*>(&grid_spec.bmax),
                                reinterpret_cast<unsigned long long*>(&grid_spec.dmax)) != 3)
                    throw std::domain_error("--grid expects amax,bmax,dmax");
            }
            Grid grid = make_grid(grid_spec);
            SelftestReport report = run_selftest(grid, threads);
            auto failures = report.failures();
            nlohmann::json rec{{"cases", report.cases},
                               {"class_sums", report.class_sums},
                               {"extremal_checked", report.extremal_checked},
                               {"mismatches", failures.size()},
                               {"failures", failures}};
            emit(format, {rec}, [&] {
                std::cout << failures.size() << " mismatches / " << report.cases
                          << " cases (tables vs series, " << report.class_sums
                          << " class sums, " << report.extremal_checked
                          << " extremal verdicts)\n";
                for (const auto& f : failures) std::cout << "  " << f << "\n";
            });
            return report.ok() ? kOk : kInternal;
        }

        if (*cmd_tables) {
            auto rows = dump_tables();
            std::vector<nlohmann::json> recs;
            for (const auto& r : rows)
                recs.push_back(nlohmann::json{{"table", r.table},
                                              {"id", r.id},
                                              {"condition", r.condition},
                                              {"value", r.value}});
            emit(format, recs, [&] {
                std::string current;
                for (const auto& r : rows) {
                    if (r.table != current) {
                        current = r.table;
                        std::cout << "Table " << current.substr(1) << ":\n";
                    }
                    std::cout << "  " << r.id << ": " << r.condition << " -> " << r.value
                              << "\n";
                }
            });
            return kOk;
        }
    } catch (const internal_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
    return kOk;
}
