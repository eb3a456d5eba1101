#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "perispec/bands.hpp"
#include "perispec/bounds.hpp"
#include "perispec/cases.hpp"
#include "perispec/errors.hpp"
#include "perispec/linalg.hpp"
#include "perispec/model.hpp"

using namespace perispec;

namespace {

constexpr double pi = std::numbers::pi;

} // namespace

TEST_CASE("R_{m,n} for Schroedinger models is 4(p1 + p2)") {
    for (auto [p1, p2] : {std::pair{2, 2}, {3, 3}, {3, 4}}) {
        const PeriodicCoefficients x =
            schroedinger_potential(p1, p2, RealArray::Zero(p1, p2));
        for (int m = 0; m < p1; ++m)
            for (int n = 0; n < p2; ++n)
                CHECK(bound_Rmn(x, m, n) == doctest::Approx(4.0 * (p1 + p2)));
    }
}

TEST_CASE("R_{m,n} simple evaluations") {
    const PeriodicCoefficients zero =
        make_coefficients(2, 2, RealArray::Zero(2, 2), ComplexArray::Zero(2, 2),
                          RealArray::Zero(2, 2), ComplexArray::Zero(2, 2));
    CHECK(bound_Rmn(zero, 0, 0) == 0.0);
    CHECK(bound_theorem(zero) == 0.0);
    CHECK(bound_trivial(zero) == 0.0);

    const PeriodicCoefficients x = make_coefficients(
        3, 3, RealArray::Constant(3, 3, 2.0), ComplexArray::Zero(3, 3),
        RealArray::Zero(3, 3), ComplexArray::Constant(3, 3, 3.0));
    CHECK(bound_Rmn(x, 1, 2) == doctest::Approx(60.0));
    CHECK(bound_theorem(x) == doctest::Approx(60.0));

    CHECK_THROWS_AS(bound_Rmn(x, 3, 0), IndexOutOfRange);
}

TEST_CASE("theorem bound equals exhaustive minimum for a random model") {
    const PeriodicCoefficients x = random_coefficients(3, 4, 2718);
    double best = bound_Rmn(x, 0, 0);
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 4; ++n) best = std::min(best, bound_Rmn(x, m, n));
    CHECK(bound_theorem(x) == doctest::Approx(best).epsilon(1e-15));
}

TEST_CASE("(2,2) dedicated formula coincides with min R_{m,n}") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const PeriodicCoefficients x = random_coefficients(2, 2, seed);
        const BoundsReport rep = compute_bounds(x);
        REQUIRE(rep.case2_bound.has_value());
        CHECK(*rep.case2_bound == doctest::Approx(rep.theorem_bound).epsilon(1e-13));
    }
}

TEST_CASE("trivial bound for the zero-potential Schroedinger model") {
    const PeriodicCoefficients x =
        schroedinger_potential(2, 2, RealArray::Zero(2, 2));
    CHECK(bound_trivial(x) == doctest::Approx(8.0));
}

TEST_CASE("large potential favors the theorem bound over the trivial one") {
    const PeriodicCoefficients x = blockdiag_example(4);
    CHECK(bound_theorem(x) == doctest::Approx(16.0));
    CHECK(bound_trivial(x) > bound_theorem(x));
}

TEST_CASE("Gershgorin bound and zero-potential comparison") {
    const PeriodicCoefficients x =
        schroedinger_potential(3, 3, RealArray::Zero(3, 3));
    CHECK(bound_gershgorin(x) == doctest::Approx(72.0));
    double max_r = 0.0;
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n) max_r = std::max(max_r, bound_Rmn(x, m, n));
    CHECK(max_r == doctest::Approx(24.0));
    CHECK(bound_gershgorin(x) >= max_r);
}

TEST_CASE("gershgorin_bound >= max R_{m,n} on random models") {
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        for (auto [p1, p2] : {std::pair{2, 2}, {2, 3}, {4, 3}}) {
            const PeriodicCoefficients x = random_coefficients(p1, p2, seed);
            double max_r = 0.0;
            for (int m = 0; m < p1; ++m)
                for (int n = 0; n < p2; ++n)
                    max_r = std::max(max_r, bound_Rmn(x, m, n));
            CHECK(bound_gershgorin(x) >= max_r - 1e-12);
        }
    }
}

TEST_CASE("staircase Gershgorin intervals are centered and disjoint") {
    const PeriodicCoefficients x = staircase_example(2, 2, 0.1);
    auto gersh = gershgorin_intervals(x);
    REQUIRE(gersh.size() == 4);
    std::sort(gersh.begin(), gersh.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (int k = 0; k < 4; ++k) {
        const double center = 10.0 * (k + 1);
        const double radius = 0.5 * (gersh[k].hi - gersh[k].lo);
        CHECK(0.5 * (gersh[k].lo + gersh[k].hi) == doctest::Approx(center));
        CHECK(radius >= 3.0);
        CHECK(radius <= 4.0);
        if (k > 0) CHECK(gersh[k].lo > gersh[k - 1].hi);
    }
}

TEST_CASE("all-zero coefficients give degenerate Gershgorin data") {
    const PeriodicCoefficients zero =
        make_coefficients(3, 3, RealArray::Zero(3, 3), ComplexArray::Zero(3, 3),
                          RealArray::Zero(3, 3), ComplexArray::Zero(3, 3));
    for (const auto& g : gershgorin_intervals(zero)) {
        CHECK(g.lo == 0.0);
        CHECK(g.hi == 0.0);
    }
    CHECK(bound_gershgorin(zero) == 0.0);
}

TEST_CASE("Krueger bound for Schroedinger operators") {
    const PeriodicCoefficients x22 =
        schroedinger_potential(2, 2, RealArray::Zero(2, 2));
    CHECK(bound_kruger(x22) == doctest::Approx(16.0 * pi));

    const PeriodicCoefficients x33 =
        schroedinger_potential(3, 3, RealArray::Zero(3, 3));
    CHECK(bound_kruger(x33) == doctest::Approx(24.0 * pi));
    CHECK(bound_theorem(x33) == doctest::Approx(bound_kruger(x33) / pi));

    const PeriodicCoefficients not_schr = random_coefficients(2, 2, 1);
    CHECK_THROWS_AS(bound_kruger(not_schr), NotSchroedinger);
}

TEST_CASE("decomposition reconstructs the symbol exactly") {
    const PeriodicCoefficients x = random_coefficients(4, 3, 31);
    for (auto [x1, x2] : {std::pair{0.0, 0.0}, {1.3, 2.2}, {5.9, 0.4}}) {
        const Momentum k(x1, x2);
        const SymbolDecomposition d = decompose_symbol(x, k);
        const CMatrix s = build_symbol(x, k);
        CHECK((d.sum() - s).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("decomposition of an alpha-free model has vanishing alpha parts") {
    const PeriodicCoefficients x = staircase_example(3, 3, 0.1);
    const SymbolDecomposition d = decompose_symbol(x, Momentum(0.9, 1.8));
    for (const auto& ej : d.e) CHECK(ej.cwiseAbs().maxCoeff() == 0.0);
    CHECK(d.s4p.cwiseAbs().maxCoeff() == 0.0);
    CHECK(d.s4pp.cwiseAbs().maxCoeff() == 0.0);
    // S3 carries the unit wrap entries of the B blocks
    CHECK(matrix_abs(d.s3).diagonal().real().maxCoeff() == doctest::Approx(1.0));
}

TEST_CASE("decomposition rejects period-2 regimes") {
    CHECK_THROWS_AS(decompose_symbol(random_coefficients(2, 3, 1), Momentum(0, 0)),
                    UnsupportedPeriod);
    CHECK_THROWS_AS(trace_identity_check(random_coefficients(3, 2, 1), Momentum(0, 0)),
                    UnsupportedPeriod);
}

TEST_CASE("trace identity equals R_{p1-1,p2-1} and is momentum-independent") {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> u(0.0, 2 * pi);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const PeriodicCoefficients x = random_coefficients(3, 4, seed);
        const double ref = bound_Rmn(x, x.p1 - 1, x.p2 - 1);
        for (int rep = 0; rep < 10; ++rep) {
            const double val = trace_identity_check(x, Momentum(u(rng), u(rng)));
            CHECK(std::abs(val - ref) <= 1e-9 * (1.0 + ref));
        }
    }
}

TEST_CASE("trace identity known values") {
    const PeriodicCoefficients schr =
        schroedinger_potential(3, 3, RealArray::Zero(3, 3));
    CHECK(trace_identity_check(schr, Momentum(0.2, 0.7)) ==
          doctest::Approx(24.0).epsilon(1e-12));

    const PeriodicCoefficients x = make_coefficients(
        3, 3, RealArray::Constant(3, 3, 2.0), ComplexArray::Zero(3, 3),
        RealArray::Zero(3, 3), ComplexArray::Constant(3, 3, 3.0));
    CHECK(trace_identity_check(x, Momentum(1.0, 2.0)) ==
          doctest::Approx(60.0).epsilon(1e-12));
}

TEST_CASE("R multiset is shift covariant, theorem bound shift invariant") {
    const PeriodicCoefficients x = random_coefficients(3, 3, 909);
    const BoundsReport rep = compute_bounds(x);
    for (auto [m, n] : {std::pair{1, 1}, {2, 0}, {0, 2}}) {
        const BoundsReport shifted = compute_bounds(shift_entries(x, m, n));
        CHECK(shifted.theorem_bound ==
              doctest::Approx(rep.theorem_bound).epsilon(1e-13));
        std::vector<double> a(rep.r.data(), rep.r.data() + rep.r.size());
        std::vector<double> b(shifted.r.data(),
                              shifted.r.data() + shifted.r.size());
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-13));
    }
}

TEST_CASE("spectrum measure respects every bound") {
    for (std::uint64_t seed = 500; seed < 510; ++seed) {
        for (auto [p1, p2] : {std::pair{2, 2}, {3, 2}, {3, 3}}) {
            const PeriodicCoefficients x = random_coefficients(p1, p2, seed);
            const auto iv = band_intervals(sample_bands(x, 24, 24));
            const double measure =
                spectrum_from_bands(iv, default_gap_tol(iv)).measure;
            CHECK(measure <= bound_theorem(x) + 1e-9);
            CHECK(measure <= bound_trivial(x) + 1e-9);
            CHECK(measure <= bound_gershgorin(x) + 1e-9);
        }
    }
}

TEST_CASE("report JSON carries the regime and the main fields") {
    const std::string j22 = to_json_string(compute_bounds(checkerboard_example(2.0)));
    CHECK(j22.find("period-2") != std::string::npos);
    CHECK(j22.find("case2_bound") != std::string::npos);
    CHECK(j22.find("kruger_bound") != std::string::npos);

    const std::string j33 =
        to_json_string(compute_bounds(random_coefficients(3, 3, 8)));
    CHECK(j33.find("p1,p2 >= 3") != std::string::npos);
    CHECK(j33.find("trace_identity_value") != std::string::npos);
}
