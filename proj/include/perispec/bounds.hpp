#ifndef PERISPEC_BOUNDS_HPP
#define PERISPEC_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "perispec/bands.hpp"
#include "perispec/model.hpp"
#include "perispec/symbol.hpp"

namespace perispec {

/// All spectral-measure bounds for one model, plus comparison data.
struct BoundsReport {
    RealArray r;                      // R_{m,n}, p1 x p2
    double theorem_bound = 0.0;       // min R_{m,n}
    double trivial_bound = 0.0;       // norm-based three-diagonal bound
    double gershgorin_bound = 0.0;    // R~ = twice the off-diagonal sum
    std::vector<Interval> gershgorin_intervals;
    double gershgorin_union_measure = 0.0;
    bool period2_gershgorin_fallback = false;
    std::optional<double> kruger_bound;       // Schroedinger only
    std::optional<double> kruger_band_bound;  // per-band version
    std::optional<double> trace_identity_value;  // 2 tr D, p1,p2 >= 3 only
    std::optional<double> case2_bound;           // p1 == p2 == 2 formula
    std::string regime;               // which formula regime applied
};

/// R_{m,n}: column sums of the (b, alpha) magnitudes at n plus row sums of
/// the (a, alpha) magnitudes at m, each scaled by 4, minus 8|alpha_{m,n}|.
double bound_Rmn(const PeriodicCoefficients& coeffs, int m, int n);

/// min over the period rectangle of R_{m,n}.  For p1 == p2 == 2 the same
/// value is produced by the dedicated 2x2 formula minimized over the shift
/// orbit (reported separately as case2_bound).
double bound_theorem(const PeriodicCoefficients& coeffs);

/// Norm bound 2||J|| from the three-diagonal block structure.
double bound_trivial(const PeriodicCoefficients& coeffs);

/// Gershgorin intervals of the symbol, centers c_{q,r}, radii the
/// momentum-independent off-diagonal row sums.  For period-2 regimes the
/// radii use the supremum over momenta of the combined entry magnitudes.
std::vector<Interval> gershgorin_intervals(const PeriodicCoefficients& coeffs);

/// R~ = 2 sum_{q,r} (4|alpha| + 2|a| + 2|b|).
double bound_gershgorin(const PeriodicCoefficients& coeffs);

/// 4*pi*(p1 + p2) for Schroedinger operators; throws NotSchroedinger
/// otherwise.  The per-band version 4*pi*(1/p1 + 1/p2) is in the report.
double bound_kruger(const PeriodicCoefficients& coeffs);

/// Hermitian six-part split of the symbol used by the trace computation:
/// constant part S1, diagonal wrap part S3, the three corner-block parts
/// S4' + S4'' + S4''', and the E_j.  Requires p1, p2 >= 3.
struct SymbolDecomposition {
    CMatrix s1;
    CMatrix s3;
    CMatrix s4p;
    CMatrix s4pp;
    CMatrix s4ppp;
    std::vector<CMatrix> e;

    CMatrix sum() const;
};

SymbolDecomposition decompose_symbol(const PeriodicCoefficients& coeffs,
                                     const Momentum& k);

/// 2 tr D computed through matrix absolute values of the decomposition
/// parts.  Momentum-independent; equals R_{p1-1,p2-1}.
double trace_identity_check(const PeriodicCoefficients& coeffs,
                            const Momentum& k);

BoundsReport compute_bounds(const PeriodicCoefficients& coeffs);

std::string to_json_string(const BoundsReport& report);

} // namespace perispec

#endif
