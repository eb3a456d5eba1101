#include "perispec/cases.hpp"

#include <cmath>

#include <Eigen/LU>

#include "perispec/errors.hpp"

namespace perispec {

PeriodicCoefficients blockdiag_example(int p1, int p2) {
    RealArray c(p1, p2);
    for (int q = 0; q < p1; ++q) c.row(q).setConstant(4.0 * (q + 1));
    return make_coefficients(p1, p2, RealArray::Zero(p1, p2),
                             ComplexArray::Zero(p1, p2), std::move(c),
                             ComplexArray::Ones(p1, p2));
}

PeriodicCoefficients diag_potential_example(int p2, int p1) {
    RealArray c(p1, p2);
    for (int r = 0; r < p2; ++r) c.col(r).setConstant(4.0 * (r + 1));
    return make_coefficients(p1, p2, RealArray::Ones(p1, p2),
                             ComplexArray::Zero(p1, p2), std::move(c),
                             ComplexArray::Zero(p1, p2));
}

PeriodicCoefficients checkerboard_example(double c) {
    RealArray pot(2, 2);
    pot << c, -c, -c, c;
    return schroedinger_potential(2, 2, std::move(pot));
}

namespace {

double tau_abs(double x) { return std::abs(Complex(1.0, 0.0) + std::polar(1.0, x)); }

} // namespace

std::array<double, 4> checkerboard_reference(double c, const Momentum& k) {
    const double t1 = tau_abs(k.x1), t2 = tau_abs(k.x2);
    const double l1 = std::sqrt(c * c + (t2 + t1) * (t2 + t1));
    const double l2 = std::sqrt(c * c + (t2 - t1) * (t2 - t1));
    return {l1, l2, -l2, -l1};
}

std::array<Interval, 2> checkerboard_spectrum(double c) {
    const double top = std::sqrt(c * c + 16.0);
    return {Interval{-top, -c}, Interval{c, top}};
}

PeriodicCoefficients two_param_example(double c1, double c2) {
    RealArray pot(2, 2);
    pot << c1, c2, -c2, -c1;
    return schroedinger_potential(2, 2, std::move(pot));
}

std::array<double, 2> two_param_z(double c1, double c2, const Momentum& k) {
    const double t1sq = tau_abs(k.x1) * tau_abs(k.x1);
    const double t2sq = tau_abs(k.x2) * tau_abs(k.x2);
    const double a = 0.5 * (c1 * c1 + c2 * c2) + t1sq + t2sq;
    const double d = (0.5 * (c1 - c2) * (c1 - c2) + 2.0 * t2sq) *
                     (0.5 * (c1 + c2) * (c1 + c2) + 2.0 * t1sq);
    const double root = std::sqrt(d);
    return {a - root, a + root};
}

TwoParamGapReport two_param_reference(double c1, double c2) {
    TwoParamGapReport rep;
    rep.c1 = c1;
    rep.c2 = c2;
    rep.z_plus_min = std::max(c1 * c1, c2 * c2);
    rep.z_minus_max = 0.5 * (c1 * c1 + c2 * c2) + 4.0 -
                      0.5 * std::abs(c1 - c2) *
                          std::sqrt((c1 + c2) * (c1 + c2) + 16.0);
    rep.interior_gap_open = c1 * c2 > 4.0;
    rep.exterior_gaps_open = rep.z_minus_max < rep.z_plus_min;
    rep.sufficient_condition_holds = c1 * c1 > c2 * c2 + 8.0;
    return rep;
}

PeriodicCoefficients staircase_example(int p1, int p2, double eps) {
    if (!(eps > 0.0 && eps < 0.125))
        throw UnsupportedSize("staircase requires 0 < eps < 1/8");
    RealArray c(p1, p2);
    for (int q = 0; q < p1; ++q)
        for (int r = 0; r < p2; ++r) c(q, r) = (q * p2 + r + 1) / eps;
    return schroedinger_potential(p1, p2, std::move(c));
}

namespace {

Complex det2(const CMatrix& m) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

} // namespace

double schur_charpoly_check(const PeriodicCoefficients& coeffs,
                            const Momentum& k, double lambda) {
    if (coeffs.p1 != 2 || coeffs.p2 != 2)
        throw UnsupportedPeriod("Schur check requires p1 = p2 = 2");
    if (coeffs.classify() != OperatorClass::Schroedinger)
        throw NotSchroedinger("Schur check requires a Schroedinger model");

    const CMatrix s = build_symbol(coeffs, k);
    const Complex lhs = (s - lambda * CMatrix::Identity(4, 4)).determinant();

    const CMatrix b1 = block_b(coeffs, 0, k.x2) - lambda * CMatrix::Identity(2, 2);
    const CMatrix b2 = block_b(coeffs, 1, k.x2) - lambda * CMatrix::Identity(2, 2);
    const double t1sq = tau_abs(k.x1) * tau_abs(k.x1);
    const Complex rhs = det2(b1 * b2 - t1sq * CMatrix::Identity(2, 2));

    return std::abs(lhs - rhs);
}

} // namespace perispec
