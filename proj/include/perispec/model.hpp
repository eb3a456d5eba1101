#ifndef PERISPEC_MODEL_HPP
#define PERISPEC_MODEL_HPP

#include <complex>
#include <cstdint>
#include <string>

#include <Eigen/Core>

namespace perispec {

using Complex = std::complex<double>;
using RealArray = Eigen::MatrixXd;      // p1 x p2
using ComplexArray = Eigen::MatrixXcd;  // p1 x p2

enum class OperatorClass {
    JacobiBlockJacobi,  // general case: Hermitian Jacobi blocks
    PartialDifference,  // alpha == 0
    Schroedinger,       // alpha == 0, a == 1, b == 1
};

const char* to_string(OperatorClass cls);

/// (p1,p2)-periodic coefficient data for a Jacobi-block-Jacobi operator.
///
/// The A blocks are 1D Jacobi matrices with diagonal a and off-diagonal
/// alpha; the B blocks have diagonal c and off-diagonal b.  All arrays are
/// p1 x p2, row index q (block index), column index r (inner index).
/// Indexing is 0-based; entry (q,r) corresponds to (q+1,r+1) in 1-based
/// notation.
struct PeriodicCoefficients {
    int p1 = 0;
    int p2 = 0;
    RealArray a;
    ComplexArray alpha;
    RealArray c;
    ComplexArray b;

    OperatorClass classify() const;

    /// Largest entry magnitude over all four arrays.
    double max_abs() const;
};

/// Validates shapes/finiteness and returns the coefficient value.
/// Throws UnsupportedPeriod if p1 < 2 or p2 < 2, ShapeMismatch or
/// NonFiniteEntry on bad arrays.
PeriodicCoefficients make_coefficients(int p1, int p2, RealArray a,
                                       ComplexArray alpha, RealArray c,
                                       ComplexArray b);

/// Discrete Schroedinger coefficients: a == 1, b == 1, alpha == 0,
/// potential c as given.
PeriodicCoefficients schroedinger_potential(int p1, int p2, RealArray c);

/// Cyclic shift of all four arrays: entry (q,r) of the result is entry
/// ((q+m) mod p1, (r+n) mod p2) of the input.  The represented operator is
/// unitarily equivalent, so its spectrum is unchanged.
PeriodicCoefficients shift_entries(const PeriodicCoefficients& x, int m, int n);

/// Seed-reproducible random model: a, c and the real/imaginary parts of
/// alpha, b are uniform in [-max_abs, max_abs].
PeriodicCoefficients random_coefficients(int p1, int p2, std::uint64_t seed,
                                         double max_abs = 2.0);

std::string to_json_string(const PeriodicCoefficients& x);
PeriodicCoefficients coefficients_from_json(const std::string& text);
PeriodicCoefficients load_coefficients(const std::string& path);

} // namespace perispec

#endif
