#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "perispec/bands.hpp"
#include "perispec/cases.hpp"
#include "perispec/errors.hpp"
#include "perispec/linalg.hpp"
#include "perispec/model.hpp"
#include "perispec/oracle.hpp"
#include "perispec/symbol.hpp"

using namespace perispec;

namespace {

constexpr double pi = std::numbers::pi;

} // namespace

TEST_CASE("one-cell torus equals the symbol at zero momentum") {
    const PeriodicCoefficients x = random_coefficients(3, 3, 13);
    const CMatrix cell = supercell_matrix(x, 1, 1);
    const CMatrix s = build_symbol(x, Momentum(0.0, 0.0));
    CHECK((cell - s).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("supercell is Hermitian with a real spectrum") {
    const PeriodicCoefficients x = random_coefficients(2, 3, 37);
    const CMatrix cell = supercell_matrix(x, 2, 2);
    CHECK(is_hermitian(cell));
    CHECK(cell.rows() == 2 * 2 * 3 * 2);
}

TEST_CASE("all-zero coefficients give the zero supercell") {
    const PeriodicCoefficients zero =
        make_coefficients(2, 2, RealArray::Zero(2, 2), ComplexArray::Zero(2, 2),
                          RealArray::Zero(2, 2), ComplexArray::Zero(2, 2));
    CHECK(supercell_matrix(zero, 2, 2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("size preconditions") {
    const PeriodicCoefficients x = random_coefficients(2, 2, 1);
    CHECK_THROWS_AS(supercell_matrix(x, 0, 1), UnsupportedSize);
    CHECK_THROWS_AS(supercell_matrix(x, 1, 1), UnsupportedSize);  // 2x2 torus
    CHECK_THROWS_AS(supercell_matrix(x, 40, 40), UnsupportedSize);  // cap
}

TEST_CASE("free Laplacian supercell matches the dispersion relation") {
    const PeriodicCoefficients x =
        schroedinger_potential(2, 2, RealArray::Zero(2, 2));
    const Eigen::VectorXd ev = oracle_spectrum(x, 2, 2);
    REQUIRE(ev.size() == 16);
    std::vector<double> expected;
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
            expected.push_back(2.0 * std::cos(pi * j / 2.0) +
                               2.0 * std::cos(pi * k / 2.0));
    std::sort(expected.begin(), expected.end(), std::greater<>());
    for (int i = 0; i < 16; ++i)
        CHECK(ev(i) == doctest::Approx(expected[i]).epsilon(1e-12));
}

TEST_CASE("functional model check on random models") {
    for (auto [p1, p2] : {std::pair{3, 3}, {2, 3}, {3, 2}, {2, 2}}) {
        const PeriodicCoefficients x = random_coefficients(p1, p2, 1000 + p1 + 7 * p2);
        const double dev = functional_model_check(x, 4, 4);
        CHECK(dev <= 1e-8 * (1.0 + x.max_abs()));
    }
}

TEST_CASE("one-cell functional model check is tight") {
    const PeriodicCoefficients x = random_coefficients(3, 4, 321);
    CHECK(functional_model_check(x, 1, 1) <= 1e-10);
}

TEST_CASE("checkerboard oracle eigenvalues lie in the closed-form spectrum") {
    const PeriodicCoefficients x = checkerboard_example(3.0);
    const Eigen::VectorXd ev = oracle_spectrum(x, 8, 8);
    const auto comps = checkerboard_spectrum(3.0);
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        const double v = ev(i);
        const bool inside =
            (v >= comps[0].lo - 1e-9 && v <= comps[0].hi + 1e-9) ||
            (v >= comps[1].lo - 1e-9 && v <= comps[1].hi + 1e-9);
        CHECK(inside);
    }
}

TEST_CASE("oracle eigenvalues lie inside the enclosure-mode spectrum") {
    const PeriodicCoefficients x = random_coefficients(2, 3, 4242);
    const SpectrumEstimate outer =
        refine_spectrum(x, {.target_tol = 1e-3, .enclosure = true});
    const Eigen::VectorXd ev = oracle_spectrum(x, 5, 4);
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        bool inside = false;
        for (const auto& comp : outer.components)
            if (ev(i) >= comp.lo - 1e-9 && ev(i) <= comp.hi + 1e-9) {
                inside = true;
                break;
            }
        CHECK(inside);
    }
}
