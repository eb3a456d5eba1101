#ifndef PERISPEC_LINALG_HPP
#define PERISPEC_LINALG_HPP

#include <Eigen/Core>

#include "perispec/symbol.hpp"

namespace perispec {

/// All eigenvalues of a Hermitian matrix, sorted non-increasing.
/// Throws NonHermitianInput if the Hermiticity invariant fails and
/// ConvergenceFailure if the solver does not converge.
Eigen::VectorXd eigenvalues_hermitian(const CMatrix& m);

/// Matrix absolute value |M| = U diag(|lambda|) U* from the spectral
/// decomposition.  Positive semidefinite; commutes with M.
CMatrix matrix_abs(const CMatrix& m);

} // namespace perispec

#endif
