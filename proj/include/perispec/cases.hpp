#ifndef PERISPEC_CASES_HPP
#define PERISPEC_CASES_HPP

#include <array>

#include "perispec/bands.hpp"
#include "perispec/model.hpp"
#include "perispec/symbol.hpp"

namespace perispec {

/// Block-diagonal model: a = alpha = 0, b = 1, c_{q,r} = 4(q+1).
/// Spectrum [2, 2 + 4*p1], measure 4*p1, equal to the theorem bound.
PeriodicCoefficients blockdiag_example(int p1, int p2 = 2);

/// Diagonal-potential model: a = 1, alpha = 0, b = 0, c_{q,r} = 4(r+1).
/// Spectrum [2, 2 + 4*p2], measure 4*p2.
PeriodicCoefficients diag_potential_example(int p2, int p1 = 2);

/// (2,2) Schroedinger checkerboard potential c_{q,r} = (-1)^{q+r} * c.
PeriodicCoefficients checkerboard_example(double c);

/// Closed-form symbol eigenvalues of the checkerboard model, descending:
/// +-sqrt(c^2 + (|tau(x2)| +- |tau(x1)|)^2) with tau(x) = 1 + e^{ix}.
std::array<double, 4> checkerboard_reference(double c, const Momentum& k);

/// Spectrum of the checkerboard model:
/// [-sqrt(c^2+16), -c] union [c, sqrt(c^2+16)].
std::array<Interval, 2> checkerboard_spectrum(double c);

/// (2,2) Schroedinger two-parameter family:
/// c_{0,0} = -c_{1,1} = c1, c_{0,1} = -c_{1,0} = c2.
PeriodicCoefficients two_param_example(double c1, double c2);

/// Gap structure of the two-parameter family from the closed forms for the
/// squared eigenvalue roots z_-(x) <= z_+(x).
struct TwoParamGapReport {
    double c1 = 0.0;
    double c2 = 0.0;
    double z_plus_min = 0.0;   // attained at (pi,pi): max(c1^2, c2^2)
    double z_minus_max = 0.0;  // attained at (0,pi)
    bool interior_gap_open = false;   // c1*c2 > 4
    bool exterior_gaps_open = false;  // z_minus_max < z_plus_min
    bool sufficient_condition_holds = false;  // c1^2 > c2^2 + 8
};

TwoParamGapReport two_param_reference(double c1, double c2);

/// Squared-eigenvalue roots z_-(x) and z_+(x) of the two-parameter family.
std::array<double, 2> two_param_z(double c1, double c2, const Momentum& k);

/// Staircase potential c_{q,r} = (q*p2 + r + 1) / eps, 0 < eps < 1/8.
/// Every Gershgorin interval holds one band; all p-1 gaps are open.
PeriodicCoefficients staircase_example(int p1, int p2, double eps);

/// |det(S(x) - lambda I4) - det((B1 - lambda)(B2 - lambda) - |tau(x1)|^2 I2)|
/// for a (2,2) Schroedinger model, both sides by direct determinant
/// evaluation.
double schur_charpoly_check(const PeriodicCoefficients& coeffs,
                            const Momentum& k, double lambda);

} // namespace perispec

#endif
