#include "perispec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "perispec/errors.hpp"
#include "perispec/linalg.hpp"

namespace perispec {

CMatrix supercell_matrix(const PeriodicCoefficients& coeffs, int n1, int n2) {
    if (n1 < 1 || n2 < 1)
        throw UnsupportedSize("supercell multipliers must be >= 1");
    const int P1 = coeffs.p1 * n1;
    const int P2 = coeffs.p2 * n2;
    if (P1 < 3 || P2 < 3)
        throw UnsupportedSize("torus too small: wrap-around neighbors coincide");
    const long order = static_cast<long>(P1) * P2;
    if (order > 4096)
        throw UnsupportedSize("supercell order " + std::to_string(order) +
                              " exceeds cap 4096");

    auto site = [&](int i, int k) {
        return ((i % P1 + P1) % P1) * P2 + ((k % P2 + P2) % P2);
    };
    CMatrix m = CMatrix::Zero(order, order);
    auto couple = [&](int s, int t, Complex w) {
        m(s, t) += w;
        m(t, s) += std::conj(w);
    };
    for (int i = 0; i < P1; ++i) {
        const int q = i % coeffs.p1;
        for (int k = 0; k < P2; ++k) {
            const int r = k % coeffs.p2;
            const int s = site(i, k);
            m(s, s) += coeffs.c(q, r);
            // within the B block: (i,k) -> (i,k+1)
            couple(s, site(i, k + 1), coeffs.b(q, r));
            // A-block diagonal: (i,k) -> (i+1,k)
            couple(s, site(i + 1, k), Complex(coeffs.a(q, r)));
            // A-block off-diagonals: (i,k) -> (i+1,k+1) and (i,k) -> (i+1,k-1)
            couple(s, site(i + 1, k + 1), coeffs.alpha(q, r));
            const int rm = (r + coeffs.p2 - 1) % coeffs.p2;
            couple(s, site(i + 1, k - 1), std::conj(coeffs.alpha(q, rm)));
        }
    }
    return m;
}

Eigen::VectorXd oracle_spectrum(const PeriodicCoefficients& coeffs, int n1,
                                int n2) {
    return eigenvalues_hermitian(supercell_matrix(coeffs, n1, n2));
}

double functional_model_check(const PeriodicCoefficients& coeffs, int n1,
                              int n2) {
    const Eigen::VectorXd cell = oracle_spectrum(coeffs, n1, n2);

    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> pooled;
    pooled.reserve(cell.size());
    for (int j = 0; j < n1; ++j)
        for (int k = 0; k < n2; ++k) {
            const Momentum mom(two_pi * j / n1, two_pi * k / n2);
            const Eigen::VectorXd ev =
                eigenvalues_hermitian(build_symbol(coeffs, mom));
            pooled.insert(pooled.end(), ev.data(), ev.data() + ev.size());
        }
    std::sort(pooled.begin(), pooled.end(), std::greater<>());

    double dev = 0.0;
    for (Eigen::Index i = 0; i < cell.size(); ++i)
        dev = std::max(dev, std::abs(cell(i) - pooled[i]));
    return dev;
}

} // namespace perispec
