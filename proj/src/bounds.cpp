#include "perispec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "perispec/errors.hpp"
#include "perispec/linalg.hpp"

namespace perispec {

using nlohmann::json;

double bound_Rmn(const PeriodicCoefficients& coeffs, int m, int n) {
    if (m < 0 || m >= coeffs.p1 || n < 0 || n >= coeffs.p2)
        throw IndexOutOfRange("(m,n) out of the period rectangle");
    double col = 0.0;
    for (int j = 0; j < coeffs.p1; ++j)
        col += std::abs(coeffs.b(j, n)) + 2.0 * std::abs(coeffs.alpha(j, n));
    double row = 0.0;
    for (int k = 0; k < coeffs.p2; ++k)
        row += std::abs(coeffs.a(m, k)) + 2.0 * std::abs(coeffs.alpha(m, k));
    return 4.0 * (col + row) - 8.0 * std::abs(coeffs.alpha(m, n));
}

namespace {

RealArray rmn_table(const PeriodicCoefficients& coeffs) {
    RealArray r(coeffs.p1, coeffs.p2);
    for (int m = 0; m < coeffs.p1; ++m)
        for (int n = 0; n < coeffs.p2; ++n) r(m, n) = bound_Rmn(coeffs, m, n);
    return r;
}

// 2x2 formula: 4(|a_{1,0}|+|a_{1,1}|+|b_{0,1}|+|b_{1,1}|
//                + 2(|alpha_{0,1}|+|alpha_{1,0}|+|alpha_{1,1}|))
double case2_formula(const PeriodicCoefficients& x) {
    return 4.0 * (std::abs(x.a(1, 0)) + std::abs(x.a(1, 1)) +
                  std::abs(x.b(0, 1)) + std::abs(x.b(1, 1)) +
                  2.0 * (std::abs(x.alpha(0, 1)) + std::abs(x.alpha(1, 0)) +
                         std::abs(x.alpha(1, 1))));
}

double case2_min_over_shifts(const PeriodicCoefficients& coeffs) {
    double best = case2_formula(coeffs);
    for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 2; ++n)
            best = std::min(best, case2_formula(shift_entries(coeffs, m, n)));
    return best;
}

} // namespace

double bound_theorem(const PeriodicCoefficients& coeffs) {
    return rmn_table(coeffs).minCoeff();
}

double bound_trivial(const PeriodicCoefficients& coeffs) {
    double block_a_part = 0.0, block_b_part = 0.0;
    for (int n = 0; n < coeffs.p1; ++n) {
        block_a_part = std::max(
            block_a_part, 8.0 * coeffs.alpha.row(n).cwiseAbs().maxCoeff() +
                              4.0 * coeffs.a.row(n).cwiseAbs().maxCoeff());
        block_b_part = std::max(
            block_b_part, 4.0 * coeffs.b.row(n).cwiseAbs().maxCoeff() +
                              2.0 * coeffs.c.row(n).cwiseAbs().maxCoeff());
    }
    return block_a_part + block_b_part;
}

std::vector<Interval> gershgorin_intervals(const PeriodicCoefficients& coeffs) {
    const Eigen::MatrixXd sup = symbol_magnitude_sup(coeffs);
    const int p = coeffs.p1 * coeffs.p2;
    std::vector<Interval> out(p);
    for (int i = 0; i < p; ++i) {
        const double center = coeffs.c(i / coeffs.p2, i % coeffs.p2);
        const double radius = sup.row(i).sum() - sup(i, i);
        out[i] = Interval{center - radius, center + radius};
    }
    return out;
}

double bound_gershgorin(const PeriodicCoefficients& coeffs) {
    double sum = 0.0;
    for (int q = 0; q < coeffs.p1; ++q)
        for (int r = 0; r < coeffs.p2; ++r)
            sum += 4.0 * std::abs(coeffs.alpha(q, r)) +
                   2.0 * std::abs(coeffs.a(q, r)) + 2.0 * std::abs(coeffs.b(q, r));
    return 2.0 * sum;
}

double bound_kruger(const PeriodicCoefficients& coeffs) {
    if (coeffs.classify() != OperatorClass::Schroedinger)
        throw NotSchroedinger("Krueger bound applies to Schroedinger operators only");
    return 4.0 * std::numbers::pi * (coeffs.p1 + coeffs.p2);
}

CMatrix SymbolDecomposition::sum() const {
    CMatrix total = s1 + s3 + s4p + s4pp + s4ppp;
    for (const auto& ej : e) total += ej;
    return total;
}

namespace {

void require_large_periods(const PeriodicCoefficients& coeffs) {
    if (coeffs.p1 < 3 || coeffs.p2 < 3)
        throw UnsupportedPeriod("decomposition requires p1 >= 3 and p2 >= 3");
}

// Tridiagonal interior of a Jacobi block (no wrap-around corner).
CMatrix block_interior(const Eigen::RowVectorXd& d, const Eigen::RowVectorXcd& o) {
    const int p2 = static_cast<int>(d.size());
    CMatrix m = CMatrix::Zero(p2, p2);
    for (int r = 0; r < p2; ++r) m(r, r) = d(r);
    for (int r = 0; r + 1 < p2; ++r) {
        m(r, r + 1) = o(r);
        m(r + 1, r) = std::conj(o(r));
    }
    return m;
}

// Wrap-around corner part of a Jacobi block.
CMatrix block_corner(const Eigen::RowVectorXcd& o, double x2) {
    const int p2 = static_cast<int>(o.size());
    CMatrix m = CMatrix::Zero(p2, p2);
    m(0, p2 - 1) = std::polar(1.0, x2) * std::conj(o(p2 - 1));
    m(p2 - 1, 0) = std::conj(m(0, p2 - 1));
    return m;
}

} // namespace

SymbolDecomposition decompose_symbol(const PeriodicCoefficients& coeffs,
                                     const Momentum& k) {
    require_large_periods(coeffs);
    const int p1 = coeffs.p1, p2 = coeffs.p2, p = p1 * p2;
    const Complex phase1 = std::polar(1.0, k.x1);
    const Complex phase2 = std::polar(1.0, k.x2);

    SymbolDecomposition d;
    d.s1 = CMatrix::Zero(p, p);
    for (int n = 0; n < p1; ++n)
        d.s1.block(n * p2, n * p2, p2, p2) =
            block_interior(coeffs.c.row(n), coeffs.b.row(n));
    for (int n = 0; n + 1 < p1; ++n) {
        const CMatrix a1 = block_interior(coeffs.a.row(n), coeffs.alpha.row(n));
        d.s1.block(n * p2, (n + 1) * p2, p2, p2) = a1;
        d.s1.block((n + 1) * p2, n * p2, p2, p2) = a1;
    }

    d.s3 = CMatrix::Zero(p, p);
    for (int n = 0; n < p1; ++n)
        d.s3.block(n * p2, n * p2, p2, p2) = block_corner(coeffs.b.row(n), k.x2);

    d.e.reserve(p1 - 1);
    for (int j = 0; j + 1 < p1; ++j) {
        CMatrix ej = CMatrix::Zero(p, p);
        const CMatrix a2 = block_corner(coeffs.alpha.row(j), k.x2);
        ej.block(j * p2, (j + 1) * p2, p2, p2) = a2;
        ej.block((j + 1) * p2, j * p2, p2, p2) = a2;
        d.e.push_back(std::move(ej));
    }

    // A_{p1-1} = G1 + G1* + G2: strictly lower Jacobi part with the phase
    // corner, its adjoint, and the diagonal.
    CMatrix g1 = CMatrix::Zero(p2, p2);
    g1(0, p2 - 1) = phase2 * std::conj(coeffs.alpha(p1 - 1, p2 - 1));
    for (int r = 0; r + 1 < p2; ++r)
        g1(r + 1, r) = std::conj(coeffs.alpha(p1 - 1, r));
    const CMatrix g2 =
        coeffs.a.row(p1 - 1).cast<Complex>().asDiagonal().toDenseMatrix();

    auto corner_pair = [&](const CMatrix& top) {
        CMatrix m = CMatrix::Zero(p, p);
        m.block(0, (p1 - 1) * p2, p2, p2) = phase1 * top;
        m.block((p1 - 1) * p2, 0, p2, p2) = std::conj(phase1) * top.adjoint();
        return m;
    };
    d.s4p = corner_pair(g1);
    d.s4pp = corner_pair(g1.adjoint());
    d.s4ppp = corner_pair(g2);
    return d;
}

double trace_identity_check(const PeriodicCoefficients& coeffs,
                            const Momentum& k) {
    const SymbolDecomposition d = decompose_symbol(coeffs, k);
    double tr = matrix_abs(d.s3).trace().real() +
                matrix_abs(d.s4p).trace().real() +
                matrix_abs(d.s4pp).trace().real() +
                matrix_abs(d.s4ppp).trace().real();
    for (const auto& ej : d.e) tr += matrix_abs(ej).trace().real();
    return 2.0 * tr;
}

BoundsReport compute_bounds(const PeriodicCoefficients& coeffs) {
    BoundsReport rep;
    rep.r = rmn_table(coeffs);
    rep.theorem_bound = rep.r.minCoeff();
    rep.trivial_bound = bound_trivial(coeffs);
    rep.gershgorin_bound = bound_gershgorin(coeffs);
    rep.gershgorin_intervals = gershgorin_intervals(coeffs);
    rep.period2_gershgorin_fallback = (coeffs.p1 == 2 || coeffs.p2 == 2);

    std::vector<BandInterval> as_bands;
    for (const auto& g : rep.gershgorin_intervals)
        as_bands.push_back(BandInterval{0, g.lo, g.hi});
    rep.gershgorin_union_measure = spectrum_from_bands(as_bands, 0.0).measure;

    if (coeffs.classify() == OperatorClass::Schroedinger) {
        rep.kruger_bound = bound_kruger(coeffs);
        rep.kruger_band_bound =
            4.0 * std::numbers::pi * (1.0 / coeffs.p1 + 1.0 / coeffs.p2);
    }
    if (coeffs.p1 >= 3 && coeffs.p2 >= 3) {
        rep.trace_identity_value = trace_identity_check(coeffs, Momentum(0.0, 0.0));
        rep.regime = "p1,p2 >= 3";
    } else {
        rep.regime = "period-2";
    }
    if (coeffs.p1 == 2 && coeffs.p2 == 2)
        rep.case2_bound = case2_min_over_shifts(coeffs);
    return rep;
}

std::string to_json_string(const BoundsReport& rep) {
    json j;
    json rows = json::array();
    for (int m = 0; m < rep.r.rows(); ++m) {
        json row = json::array();
        for (int n = 0; n < rep.r.cols(); ++n) row.push_back(rep.r(m, n));
        rows.push_back(std::move(row));
    }
    j["R"] = std::move(rows);
    j["theorem_bound"] = rep.theorem_bound;
    j["trivial_bound"] = rep.trivial_bound;
    j["gershgorin_bound"] = rep.gershgorin_bound;
    json gs = json::array();
    for (const auto& g : rep.gershgorin_intervals) gs.push_back({g.lo, g.hi});
    j["gershgorin_intervals"] = std::move(gs);
    j["gershgorin_union_measure"] = rep.gershgorin_union_measure;
    j["period2_gershgorin_fallback"] = rep.period2_gershgorin_fallback;
    if (rep.kruger_bound) j["kruger_bound"] = *rep.kruger_bound;
    if (rep.kruger_band_bound) j["kruger_band_bound"] = *rep.kruger_band_bound;
    if (rep.trace_identity_value)
        j["trace_identity_value"] = *rep.trace_identity_value;
    if (rep.case2_bound) j["case2_bound"] = *rep.case2_bound;
    j["regime"] = rep.regime;
    return j.dump(2);
}

} // namespace perispec
