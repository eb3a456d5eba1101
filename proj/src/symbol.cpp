#include "perispec/symbol.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "perispec/errors.hpp"

namespace perispec {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

} // namespace

double Momentum::reduce(double x) {
    double r = std::fmod(x, two_pi);
    if (r < 0.0) r += two_pi;
    // fmod can return exactly two_pi after the correction for tiny negatives
    if (r >= two_pi) r -= two_pi;
    return r;
}

Momentum::Momentum(double x1_, double x2_) : x1(reduce(x1_)), x2(reduce(x2_)) {}

double hermiticity_defect(const CMatrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& m) {
    if (m.rows() != m.cols()) return false;
    const double scale = 1.0 + m.cwiseAbs().maxCoeff();
    return hermiticity_defect(m) <= 1e-13 * scale;
}

namespace {

// Jacobi block with diagonal row d and off-diagonal row o, phase e^{i x2}
// on the wrap-around entry.
CMatrix jacobi_block(const Eigen::RowVectorXd& d, const Eigen::RowVectorXcd& o,
                     double x2) {
    const int p2 = static_cast<int>(d.size());
    CMatrix m = CMatrix::Zero(p2, p2);
    const Complex phase = std::polar(1.0, x2);
    if (p2 == 2) {
        const Complex off = o(0) + phase * std::conj(o(1));
        m(0, 0) = d(0);
        m(1, 1) = d(1);
        m(0, 1) = off;
        m(1, 0) = std::conj(off);
        return m;
    }
    for (int r = 0; r < p2; ++r) m(r, r) = d(r);
    for (int r = 0; r + 1 < p2; ++r) {
        m(r, r + 1) = o(r);
        m(r + 1, r) = std::conj(o(r));
    }
    m(0, p2 - 1) = phase * std::conj(o(p2 - 1));
    m(p2 - 1, 0) = std::conj(m(0, p2 - 1));
    return m;
}

// Entrywise sup over x2 of |jacobi_block| entries.
Eigen::MatrixXd jacobi_block_sup(const Eigen::RowVectorXd& dabs,
                                 const Eigen::RowVectorXd& oabs) {
    const int p2 = static_cast<int>(dabs.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p2, p2);
    if (p2 == 2) {
        m(0, 0) = dabs(0);
        m(1, 1) = dabs(1);
        m(0, 1) = m(1, 0) = oabs(0) + oabs(1);
        return m;
    }
    for (int r = 0; r < p2; ++r) m(r, r) = dabs(r);
    for (int r = 0; r + 1 < p2; ++r) m(r, r + 1) = m(r + 1, r) = oabs(r);
    m(0, p2 - 1) = m(p2 - 1, 0) = oabs(p2 - 1);
    return m;
}

// Entrywise sup of |d(block)/dx2|: only the wrap-around part carries x2.
Eigen::MatrixXd jacobi_block_dx2_sup(const Eigen::RowVectorXd& oabs) {
    const int p2 = static_cast<int>(oabs.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p2, p2);
    if (p2 == 2) {
        m(0, 1) = m(1, 0) = oabs(1);
        return m;
    }
    m(0, p2 - 1) = m(p2 - 1, 0) = oabs(p2 - 1);
    return m;
}

void check_block_index(const PeriodicCoefficients& coeffs, int n) {
    if (n < 0 || n >= coeffs.p1)
        throw IndexOutOfRange("block index " + std::to_string(n) +
                              " out of range [0," + std::to_string(coeffs.p1) + ")");
}

} // namespace

CMatrix block_a(const PeriodicCoefficients& coeffs, int n, double x2) {
    check_block_index(coeffs, n);
    return jacobi_block(coeffs.a.row(n), coeffs.alpha.row(n), Momentum::reduce(x2));
}

CMatrix block_b(const PeriodicCoefficients& coeffs, int n, double x2) {
    check_block_index(coeffs, n);
    return jacobi_block(coeffs.c.row(n), coeffs.b.row(n), Momentum::reduce(x2));
}

CMatrix build_symbol(const PeriodicCoefficients& coeffs, const Momentum& k) {
    const int p1 = coeffs.p1, p2 = coeffs.p2, p = p1 * p2;
    const Complex phase1 = std::polar(1.0, k.x1);

    std::vector<CMatrix> A(p1), B(p1);
    for (int n = 0; n < p1; ++n) {
        A[n] = jacobi_block(coeffs.a.row(n), coeffs.alpha.row(n), k.x2);
        B[n] = jacobi_block(coeffs.c.row(n), coeffs.b.row(n), k.x2);
    }

    CMatrix s = CMatrix::Zero(p, p);
    if (p1 == 2) {
        s.block(0, 0, p2, p2) = B[0];
        s.block(p2, p2, p2, p2) = B[1];
        const CMatrix off = A[0] + phase1 * A[1];
        s.block(0, p2, p2, p2) = off;
        s.block(p2, 0, p2, p2) = off.adjoint();
        return s;
    }
    for (int n = 0; n < p1; ++n) s.block(n * p2, n * p2, p2, p2) = B[n];
    for (int n = 0; n + 1 < p1; ++n) {
        s.block(n * p2, (n + 1) * p2, p2, p2) = A[n];
        s.block((n + 1) * p2, n * p2, p2, p2) = A[n];
    }
    s.block(0, (p1 - 1) * p2, p2, p2) = phase1 * A[p1 - 1];
    s.block((p1 - 1) * p2, 0, p2, p2) = std::conj(phase1) * A[p1 - 1];
    return s;
}

Eigen::MatrixXd symbol_magnitude_sup(const PeriodicCoefficients& coeffs) {
    const int p1 = coeffs.p1, p2 = coeffs.p2, p = p1 * p2;
    std::vector<Eigen::MatrixXd> A(p1), B(p1);
    for (int n = 0; n < p1; ++n) {
        A[n] = jacobi_block_sup(coeffs.a.row(n).cwiseAbs(),
                                coeffs.alpha.row(n).cwiseAbs());
        B[n] = jacobi_block_sup(coeffs.c.row(n).cwiseAbs(),
                                coeffs.b.row(n).cwiseAbs());
    }
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(p, p);
    if (p1 == 2) {
        s.block(0, 0, p2, p2) = B[0];
        s.block(p2, p2, p2, p2) = B[1];
        const Eigen::MatrixXd off = A[0] + A[1];
        s.block(0, p2, p2, p2) = off;
        s.block(p2, 0, p2, p2) = off.transpose();
        return s;
    }
    for (int n = 0; n < p1; ++n) s.block(n * p2, n * p2, p2, p2) = B[n];
    for (int n = 0; n + 1 < p1; ++n) {
        s.block(n * p2, (n + 1) * p2, p2, p2) = A[n];
        s.block((n + 1) * p2, n * p2, p2, p2) = A[n];
    }
    s.block(0, (p1 - 1) * p2, p2, p2) = A[p1 - 1];
    s.block((p1 - 1) * p2, 0, p2, p2) = A[p1 - 1];
    return s;
}

double symbol_lipschitz_bound(const PeriodicCoefficients& coeffs) {
    const int p1 = coeffs.p1, p2 = coeffs.p2, p = p1 * p2;

    // |dS/dx1|: only blocks multiplied by e^{+-i x1}.
    Eigen::MatrixXd d1 = Eigen::MatrixXd::Zero(p, p);
    const Eigen::MatrixXd a_last = jacobi_block_sup(
        coeffs.a.row(p1 - 1).cwiseAbs(), coeffs.alpha.row(p1 - 1).cwiseAbs());
    if (p1 == 2) {
        d1.block(0, p2, p2, p2) = a_last;
        d1.block(p2, 0, p2, p2) = a_last.transpose();
    } else {
        d1.block(0, (p1 - 1) * p2, p2, p2) = a_last;
        d1.block((p1 - 1) * p2, 0, p2, p2) = a_last;
    }

    // |dS/dx2|: wrap-around entries of every A and B block.
    std::vector<Eigen::MatrixXd> dA(p1), dB(p1);
    for (int n = 0; n < p1; ++n) {
        dA[n] = jacobi_block_dx2_sup(coeffs.alpha.row(n).cwiseAbs());
        dB[n] = jacobi_block_dx2_sup(coeffs.b.row(n).cwiseAbs());
    }
    Eigen::MatrixXd d2 = Eigen::MatrixXd::Zero(p, p);
    if (p1 == 2) {
        d2.block(0, 0, p2, p2) = dB[0];
        d2.block(p2, p2, p2, p2) = dB[1];
        const Eigen::MatrixXd off = dA[0] + dA[1];
        d2.block(0, p2, p2, p2) = off;
        d2.block(p2, 0, p2, p2) = off.transpose();
    } else {
        for (int n = 0; n < p1; ++n) d2.block(n * p2, n * p2, p2, p2) = dB[n];
        for (int n = 0; n + 1 < p1; ++n) {
            d2.block(n * p2, (n + 1) * p2, p2, p2) = dA[n];
            d2.block((n + 1) * p2, n * p2, p2, p2) = dA[n];
        }
        d2.block(0, (p1 - 1) * p2, p2, p2) = dA[p1 - 1];
        d2.block((p1 - 1) * p2, 0, p2, p2) = dA[p1 - 1];
    }

    // Max row sum bounds the spectral norm for these symmetric patterns.
    return d1.rowwise().sum().maxCoeff() + d2.rowwise().sum().maxCoeff();
}

} // namespace perispec
