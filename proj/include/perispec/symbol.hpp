#ifndef PERISPEC_SYMBOL_HPP
#define PERISPEC_SYMBOL_HPP

#include <Eigen/Core>

#include "perispec/model.hpp"

namespace perispec {

using CMatrix = Eigen::MatrixXcd;

/// Momentum on the torus, stored reduced to [0, 2*pi).
struct Momentum {
    double x1 = 0.0;
    double x2 = 0.0;

    Momentum() = default;
    Momentum(double x1_, double x2_);

    static double reduce(double x);
};

/// max_{i,j} |M(i,j) - conj(M(j,i))|
double hermiticity_defect(const CMatrix& m);

/// Checks the Hermiticity invariant: defect <= 1e-13 * (1 + max |entry|).
bool is_hermitian(const CMatrix& m);

/// Block of A-type (diagonal a, off-diagonal alpha) for block row n,
/// order p2.  For p2 >= 3 this is the tridiagonal matrix with phase
/// corners; for p2 == 2 the 2x2 form with combined off-diagonal
/// alpha_{n,0} + e^{i x2} conj(alpha_{n,1}).
CMatrix block_a(const PeriodicCoefficients& coeffs, int n, double x2);

/// Same structure with (c, b) in place of (a, alpha).
CMatrix block_b(const PeriodicCoefficients& coeffs, int n, double x2);

/// The full symbol of order p = p1*p2.  For p1 >= 3: block-tridiagonal with
/// diagonal blocks B_n, off-diagonal blocks A_n and phase corner blocks
/// e^{+-i x1} A_{p1-1}.  For p1 == 2: the 2x2 block form with off-diagonal
/// block A_0 + e^{i x1} A_1.
CMatrix build_symbol(const PeriodicCoefficients& coeffs, const Momentum& k);

/// Entrywise supremum over the torus of |symbol entry|.  For p1,p2 >= 3 the
/// magnitudes are momentum-independent and this equals |S(x)| exactly; for
/// period-2 regimes combined entries are bounded by triangle inequality.
Eigen::MatrixXd symbol_magnitude_sup(const PeriodicCoefficients& coeffs);

/// Upper bound for sup ||dS/dx1|| + sup ||dS/dx2|| via row sums of the
/// phase-carrying entry magnitudes.  Used for rigorous band-edge padding.
double symbol_lipschitz_bound(const PeriodicCoefficients& coeffs);

} // namespace perispec

#endif
