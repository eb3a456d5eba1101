#ifndef PERISPEC_ORACLE_HPP
#define PERISPEC_ORACLE_HPP

#include <Eigen/Core>

#include "perispec/model.hpp"
#include "perispec/symbol.hpp"

namespace perispec {

/// Operator on the discrete torus Z/(p1*N1) x Z/(p2*N2) with periodic
/// (Born-von Karman) boundary conditions, lexicographic site ordering
/// (first index major).  Order p1*N1*p2*N2, capped at 4096.
CMatrix supercell_matrix(const PeriodicCoefficients& coeffs, int n1, int n2);

/// Eigenvalues of the supercell, descending.
Eigen::VectorXd oracle_spectrum(const PeriodicCoefficients& coeffs, int n1,
                                int n2);

/// Max absolute difference between the sorted supercell spectrum and the
/// sorted union of symbol eigenvalues at the lattice momenta
/// (2*pi*j/N1, 2*pi*k/N2).  Small values verify the direct-integral
/// equivalence at finite volume.
double functional_model_check(const PeriodicCoefficients& coeffs, int n1,
                              int n2);

} // namespace perispec

#endif
