#ifndef PERISPEC_BANDS_HPP
#define PERISPEC_BANDS_HPP

#include <iosfwd>
#include <vector>

#include "perispec/model.hpp"

namespace perispec {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
};

/// Symbol eigenvalues sampled on an N1 x N2 momentum grid, x_i = 2*pi*j/N_i.
/// lambda is stored node-major; per node the p values are non-increasing.
struct BandGrid {
    int n1 = 0;
    int n2 = 0;
    int p = 0;
    std::vector<double> lambda;

    double at(int j, int k, int band) const {
        return lambda[(static_cast<std::size_t>(j) * n2 + k) * p + band];
    }
    double x1(int j) const;
    double x2(int k) const;
};

/// Band interval [min, max] of the k-th eigenvalue over the sampled grid
/// (inner approximation of the true band).
struct BandInterval {
    int band = 0;
    double lo = 0.0;
    double hi = 0.0;
};

/// Merged spectrum: disjoint sorted components, their total length, and the
/// open gaps between consecutive components.
struct SpectrumEstimate {
    std::vector<Interval> components;
    std::vector<Interval> gaps;
    double measure = 0.0;
    int grid_n1 = 0;
    int grid_n2 = 0;
    bool enclosure = false;
    double padding = 0.0;
};

BandGrid sample_bands(const PeriodicCoefficients& coeffs, int n1, int n2);

std::vector<BandInterval> band_intervals(const BandGrid& grid);

/// Default merge tolerance: 1e-8 times the sampled spectral width.
double default_gap_tol(const std::vector<BandInterval>& intervals);

/// Sweep-merge of the closed band intervals; two intervals merge when
/// separated by less than gap_tol.
SpectrumEstimate spectrum_from_bands(std::vector<BandInterval> intervals,
                                     double gap_tol);

struct RefineOptions {
    double target_tol = 1e-4;
    int start_grid = 32;
    int grid_cap = 2048;
    bool enclosure = false;  // pad each band by Lipschitz slack L*h
};

/// Doubles the grid until every band edge moves less than target_tol
/// between successive grids.  Throws BudgetExceeded at the grid cap.
SpectrumEstimate refine_spectrum(const PeriodicCoefficients& coeffs,
                                 const RefineOptions& opts = {});

/// CSV export: header j,k,x1,x2,lambda_1,...,lambda_p; 17 significant digits.
void write_band_csv(std::ostream& out, const BandGrid& grid);

std::string to_json_string(const SpectrumEstimate& est);

} // namespace perispec

#endif
