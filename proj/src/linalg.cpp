#include "perispec/linalg.hpp"

#include <Eigen/Eigenvalues>

#include "perispec/errors.hpp"

namespace perispec {

namespace {

void require_hermitian(const CMatrix& m) {
    if (m.rows() != m.cols())
        throw NonHermitianInput("matrix is not square");
    if (!is_hermitian(m))
        throw NonHermitianInput("Hermiticity invariant violated, defect " +
                                std::to_string(hermiticity_defect(m)));
}

} // namespace

Eigen::VectorXd eigenvalues_hermitian(const CMatrix& m) {
    require_hermitian(m);
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw ConvergenceFailure("Hermitian eigensolver failed to converge");
    return solver.eigenvalues().reverse();
}

CMatrix matrix_abs(const CMatrix& m) {
    require_hermitian(m);
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw ConvergenceFailure("Hermitian eigensolver failed to converge");
    const CMatrix& u = solver.eigenvectors();
    CMatrix abs = u * solver.eigenvalues().cwiseAbs().asDiagonal() * u.adjoint();
    // symmetrize roundoff
    return 0.5 * (abs + abs.adjoint()).eval();
}

} // namespace perispec
