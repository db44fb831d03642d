#include "seqdiv/selftest.hpp"

#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "seqdiv/extremal.hpp"
#include "seqdiv/series.hpp"
#include "seqdiv/tables.hpp"

namespace seqdiv {

std::vector<std::string> SelftestReport::failures() const {
    std::vector<std::string> all;
    all.insert(all.end(), series_failures.begin(), series_failures.end());
    all.insert(all.end(), class_sum_failures.begin(), class_sum_failures.end());
    all.insert(all.end(), extremal_failures.begin(), extremal_failures.end());
    return all;
}

Grid default_grid() {
    Grid g;
    for (u64 a = 2; a <= 12; ++a) g.a_values.push_back(a);
    for (u64 a : {16, 25, 27, 36, 81, 256}) g.a_values.push_back(a);
    g.b_values = {1, 2, 3, 5};
    g.d_max = 60;
    return g;
}

namespace {

std::string tuple_str(u64 a, u64 b, u64 c, u64 d) {
    std::ostringstream os;
    os << "(a=" << a << ", b=" << b << ", c=" << c << ", d=" << d << ")";
    return os.str();
}

}  // namespace

SelftestReport run_selftest(const Grid& grid, unsigned threads) {
    check_table_integrity();

    std::vector<std::pair<u64, u64>> pairs;
    for (u64 a : grid.a_values)
        for (u64 b : grid.b_values)
            if (a != b) pairs.emplace_back(a, b);

    if (threads == 0) threads = 1;
    std::atomic<size_t> next{0};
    std::mutex merge_mutex;
    SelftestReport report;

    auto work = [&]() {
        SelftestReport local;
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= pairs.size()) break;
            auto [a, b] = pairs[i];
            Rat table0 = density_table0(a, b);
            for (u64 d = 1; d <= grid.d_max; ++d) {
                Rat class_sum = 0;
                for (u64 c = 1; c <= d; ++c) {
                    if (std::gcd(c, d) != 1) continue;
                    ++local.cases;
                    Params p = extract_params(a, b, static_cast<i64>(c), d);
                    DensityResult dens = density(p);
                    class_sum += dens.density;

                    Rat series;
                    try {
                        series = density_series(p);
                    } catch (const internal_error& e) {
                        local.series_failures.push_back("series error at " +
                                                        tuple_str(a, b, c, d) + ": " + e.what());
                        continue;
                    }
                    if (series != dens.density) {
                        local.series_failures.push_back(
                            "tables/series mismatch at " + tuple_str(a, b, c, d) + ": table " +
                            dens.row + " gives " + rat_str(dens.density) + ", series gives " +
                            rat_str(series));
                    }

                    ++local.extremal_checked;
                    ExtremalClass ex = classify_extremal(p);
                    Rat full = Rat(1, euler_phi(d));
                    bool is_zero = dens.density == 0;
                    bool is_full = dens.density == full;
                    bool kind_ok = (ex.kind == ExtremalKind::Zero) == is_zero &&
                                   (ex.kind == ExtremalKind::Full) == is_full;
                    // d = 1 makes 0 and 1/phi(d) collide only if density were
                    // 0 or 1; Table 0 values are strictly inside (0, 1).
                    if (!kind_ok) {
                        local.extremal_failures.push_back(
                            "extremal disagreement at " + tuple_str(a, b, c, d) + ": kind " +
                            extremal_kind_name(ex.kind) + " vs density " +
                            rat_str(dens.density));
                    }
                }
                ++local.class_sums;
                if (class_sum != table0) {
                    std::ostringstream os;
                    os << "class-sum mismatch at (a=" << a << ", b=" << b << ", d=" << d
                       << "): sum " << rat_str(class_sum) << " vs delta(r) " << rat_str(table0);
                    local.class_sum_failures.push_back(os.str());
                }
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        report.cases += local.cases;
        report.class_sums += local.class_sums;
        report.extremal_checked += local.extremal_checked;
        auto append = [](std::vector<std::string>& dst, const std::vector<std::string>& src) {
            dst.insert(dst.end(), src.begin(), src.end());
        };
        append(report.series_failures, local.series_failures);
        append(report.class_sum_failures, local.class_sum_failures);
        append(report.extremal_failures, local.extremal_failures);
    };

    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return report;
}

}  // namespace seqdiv
