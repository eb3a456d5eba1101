#include "perispec/bands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <thread>

#include <nlohmann/json.hpp>

#include "perispec/errors.hpp"
#include "perispec/linalg.hpp"
#include "perispec/symbol.hpp"

namespace perispec {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

} // namespace

double BandGrid::x1(int j) const { return two_pi * j / n1; }
double BandGrid::x2(int k) const { return two_pi * k / n2; }

BandGrid sample_bands(const PeriodicCoefficients& coeffs, int n1, int n2) {
    if (n1 < 2 || n2 < 2)
        throw UnsupportedSize("grid sizes must be >= 2");
    const int p = coeffs.p1 * coeffs.p2;
    BandGrid grid;
    grid.n1 = n1;
    grid.n2 = n2;
    grid.p = p;
    grid.lambda.resize(static_cast<std::size_t>(n1) * n2 * p);

    auto compute_rows = [&](int j_begin, int j_end) {
        for (int j = j_begin; j < j_end; ++j) {
            const double x1 = two_pi * j / n1;
            for (int k = 0; k < n2; ++k) {
                const Momentum mom(x1, two_pi * k / n2);
                const Eigen::VectorXd ev =
                    eigenvalues_hermitian(build_symbol(coeffs, mom));
                double* dst =
                    &grid.lambda[(static_cast<std::size_t>(j) * n2 + k) * p];
                for (int band = 0; band < p; ++band) dst[band] = ev(band);
            }
        }
    };

    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    const int nthreads = std::clamp(std::min(hw, n1), 1, 16);
    if (nthreads <= 1) {
        compute_rows(0, n1);
    } else {
        std::vector<std::thread> workers;
        const int chunk = (n1 + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            const int b = t * chunk, e = std::min(n1, b + chunk);
            if (b >= e) break;
            workers.emplace_back(compute_rows, b, e);
        }
        for (auto& w : workers) w.join();
    }
    return grid;
}

std::vector<BandInterval> band_intervals(const BandGrid& grid) {
    std::vector<BandInterval> out(grid.p);
    for (int band = 0; band < grid.p; ++band) {
        double lo = grid.at(0, 0, band), hi = lo;
        for (int j = 0; j < grid.n1; ++j)
            for (int k = 0; k < grid.n2; ++k) {
                const double v = grid.at(j, k, band);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        out[band] = BandInterval{band, lo, hi};
    }
    return out;
}

double default_gap_tol(const std::vector<BandInterval>& intervals) {
    if (intervals.empty()) return 0.0;
    double lo = intervals.front().lo, hi = intervals.front().hi;
    for (const auto& iv : intervals) {
        lo = std::min(lo, iv.lo);
        hi = std::max(hi, iv.hi);
    }
    return 1e-8 * (hi - lo);
}

SpectrumEstimate spectrum_from_bands(std::vector<BandInterval> intervals,
                                     double gap_tol) {
    SpectrumEstimate est;
    if (intervals.empty()) return est;
    std::sort(intervals.begin(), intervals.end(),
              [](const BandInterval& a, const BandInterval& b) {
                  return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
              });
    Interval cur{intervals.front().lo, intervals.front().hi};
    for (std::size_t i = 1; i < intervals.size(); ++i) {
        const auto& iv = intervals[i];
        if (iv.lo <= cur.hi + gap_tol) {
            cur.hi = std::max(cur.hi, iv.hi);
        } else {
            est.components.push_back(cur);
            est.gaps.push_back(Interval{cur.hi, iv.lo});
            cur = Interval{iv.lo, iv.hi};
        }
    }
    est.components.push_back(cur);
    for (const auto& comp : est.components) est.measure += comp.length();
    return est;
}

namespace {

SpectrumEstimate assemble(const PeriodicCoefficients& coeffs,
                          std::vector<BandInterval> intervals, int n,
                          bool enclosure) {
    double pad = 0.0;
    if (enclosure) {
        const double h = std::hypot(two_pi / n, two_pi / n);
        pad = symbol_lipschitz_bound(coeffs) * h;
        for (auto& iv : intervals) {
            iv.lo -= pad;
            iv.hi += pad;
        }
    }
    SpectrumEstimate est =
        spectrum_from_bands(intervals, default_gap_tol(intervals));
    est.grid_n1 = est.grid_n2 = n;
    est.enclosure = enclosure;
    est.padding = pad;
    return est;
}

} // namespace

SpectrumEstimate refine_spectrum(const PeriodicCoefficients& coeffs,
                                 const RefineOptions& opts) {
    if (opts.target_tol <= 0.0)
        throw UnsupportedSize("target_tol must be positive");
    int n = opts.start_grid;
    std::vector<BandInterval> prev = band_intervals(sample_bands(coeffs, n, n));
    while (true) {
        if (2 * n > opts.grid_cap)
            throw BudgetExceeded("band edges did not converge at grid cap " +
                                 std::to_string(opts.grid_cap));
        n *= 2;
        std::vector<BandInterval> cur = band_intervals(sample_bands(coeffs, n, n));
        double move = 0.0;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            move = std::max(move, std::abs(cur[i].lo - prev[i].lo));
            move = std::max(move, std::abs(cur[i].hi - prev[i].hi));
        }
        if (move < opts.target_tol)
            return assemble(coeffs, std::move(cur), n, opts.enclosure);
        prev = std::move(cur);
    }
}

void write_band_csv(std::ostream& out, const BandGrid& grid) {
    out << "j,k,x1,x2";
    for (int band = 1; band <= grid.p; ++band) out << ",lambda_" << band;
    out << "\n";
    char buf[32];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out << ',' << buf;
    };
    for (int j = 0; j < grid.n1; ++j)
        for (int k = 0; k < grid.n2; ++k) {
            out << j << ',' << k;
            put(grid.x1(j));
            put(grid.x2(k));
            for (int band = 0; band < grid.p; ++band) put(grid.at(j, k, band));
            out << "\n";
        }
}

std::string to_json_string(const SpectrumEstimate& est) {
    nlohmann::json j;
    j["schema"] = "perispec-spectrum-v1";
    auto intervals = [](const std::vector<Interval>& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& iv : v) arr.push_back({iv.lo, iv.hi});
        return arr;
    };
    j["components"] = intervals(est.components);
    j["gaps"] = intervals(est.gaps);
    j["gap_count"] = est.gaps.size();
    j["measure"] = est.measure;
    j["grid"] = {est.grid_n1, est.grid_n2};
    j["enclosure"] = est.enclosure;
    j["padding"] = est.padding;
    return j.dump(2);
}

} // namespace perispec
