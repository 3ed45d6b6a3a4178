#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "rindler/params.hpp"
#include "rindler/sl_solver.hpp"
#include "rindler/spectrum.hpp"

using namespace rindler;
using Catch::Approx;

namespace {

// A tridiagonal system with hand-picked entries; the grid is metadata only.
sl::TridiagonalSystem make_system(std::vector<double> diag, std::vector<double> off) {
    sl::Grid dummy(60.0, 50);
    return sl::TridiagonalSystem{std::move(diag), std::move(off), dummy};
}

int sign_changes(const std::vector<double>& v) {
    int changes = 0;
    double prev = 0.0;
    for (double x : v) {
        if (std::abs(x) < 1e-9) continue;  // skip entries at rounding level
        if (prev != 0.0 && x * prev < 0.0) ++changes;
        prev = x;
    }
    return changes;
}

}  // namespace

TEST_CASE("grid invariants") {
    CHECK_THROWS_AS(sl::Grid(60.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(sl::Grid(-1.0, 100), std::invalid_argument);
    const sl::Grid g(60.0, 6000);
    CHECK(g.h == Approx(0.01));
    CHECK(g.node(0) == Approx(0.005));
    CHECK(g.node(5999) < 60.0);
}

TEST_CASE("discretization sign structure and flux telescoping") {
    const sl::Grid g(40.0, 400);
    const auto sys = sl::discretize_sl(g);
    for (double d : sys.diag) CHECK(d > 0.0);
    for (double o : sys.offdiag) CHECK(o < 0.0);

    // A v for v = 1: the flux terms cancel in the interior, leaving zeta_i / 4.
    const int n = g.n_points;
    for (int i = 1; i + 1 < n; ++i) {
        const double av = sys.offdiag[i - 1] + sys.diag[i] + sys.offdiag[i];
        CHECK(av == Approx(g.node(i) / 4.0).margin(1e-9));
    }
}

TEST_CASE("discretization is second order against the exact ground state") {
    // Residual of A phi - sigma phi at a fixed interior location shrinks ~4x
    // per grid halving.
    auto residual_at = [](const sl::Grid& g) {
        const auto sys = sl::discretize_sl(g);
        const auto phi = spectrum::eigenfunction(0);
        const int i = g.n_points / 4;  // interior row, zeta = zeta_max / 4
        const double r = sys.offdiag[i - 1] * phi(g.node(i - 1)) +
                         sys.diag[i] * phi(g.node(i)) +
                         sys.offdiag[i] * phi(g.node(i + 1)) - 0.5 * phi(g.node(i));
        return std::abs(r);
    };
    const double r1 = residual_at(sl::Grid(20.0, 200));
    const double r2 = residual_at(sl::Grid(20.0, 400));
    CHECK(r1 / r2 == Approx(4.0).margin(0.6));
}

TEST_CASE("tridiagonal eigensolver on known spectra") {
    SECTION("3x3 Toeplitz") {
        const auto sys = make_system({2.0, 2.0, 2.0}, {-1.0, -1.0});
        const auto eigs = sl::eig_tridiagonal(sys, 3);
        CHECK(eigs[0] == Approx(2.0 - std::sqrt(2.0)).margin(1e-11));
        CHECK(eigs[1] == Approx(2.0).margin(1e-11));
        CHECK(eigs[2] == Approx(2.0 + std::sqrt(2.0)).margin(1e-11));
    }
    SECTION("1x1") {
        const auto sys = make_system({5.0}, {});
        CHECK(sl::eig_tridiagonal(sys, 1)[0] == Approx(5.0).margin(1e-11));
    }
    SECTION("k out of range") {
        const auto sys = make_system({5.0}, {});
        CHECK_THROWS_AS(sl::eig_tridiagonal(sys, 2), std::invalid_argument);
    }
}

TEST_CASE("SL eigenvalues converge to the half-integer quantization") {
    const sl::Grid g(60.0, 6000);
    const auto sys = sl::discretize_sl(g);
    const auto eigs = sl::eig_tridiagonal(sys, 5);
    for (int n = 0; n < 5; ++n) CHECK(std::abs(eigs[n] - (n + 0.5)) < 2e-5);

    SECTION("Sturm count below 5.0 is 5") {
        CHECK(sl::sturm_count(sys, 5.0) == 5);
    }
    SECTION("eigenvalues respect the Gershgorin lower bound") {
        const double lb = sys.gershgorin_lower_bound();
        for (double e : eigs) CHECK(e >= lb);
    }
}

TEST_CASE("eigenvectors obey Sturm oscillation") {
    const sl::Grid g(60.0, 2000);
    const auto sys = sl::discretize_sl(g);
    const auto eigs = sl::eig_tridiagonal(sys, 6);
    for (int n = 0; n <= 5; ++n) {
        const auto v = sl::eig_vector(sys, eigs[n]);
        CHECK(sign_changes(v) == n);
    }
}

TEST_CASE("solve_spectrum maps sigma to energies") {
    auto p = natural_units(0.1);
    const sl::Grid g(60.0, 6000);
    const auto levels = sl::solve_spectrum(p, g, 5);
    CHECK(levels[0].energy_numeric == Approx(0.5 * std::sqrt(2.0) * 0.1).margin(1e-4));

    SECTION("spacings equal within 1e-4 relative") {
        const double first = levels[1].energy_numeric - levels[0].energy_numeric;
        for (int n = 1; n + 1 < 5; ++n) {
            const double s = levels[n + 1].energy_numeric - levels[n].energy_numeric;
            CHECK(std::abs(s - first) / first < 1e-4);
        }
    }
    SECTION("transverse momentum raises the spacing") {
        auto pt = natural_units(0.1);
        pt.p_y = 1.0;
        const auto lt = sl::solve_spectrum(pt, g, 1);
        CHECK(lt[0].energy_numeric == Approx(0.5 * std::sqrt(3.0) * 0.1).margin(1e-4));
    }
    SECTION("determinism") {
        const auto again = sl::solve_spectrum(p, g, 5);
        for (int n = 0; n < 5; ++n)
            CHECK(again[n].sigma_numeric == levels[n].sigma_numeric);
    }
}

TEST_CASE("convergence study shows second order") {
    const auto p = natural_units(0.1);
    std::vector<sl::Grid> grids{sl::Grid(60.0, 750), sl::Grid(60.0, 1500),
                                sl::Grid(60.0, 3000), sl::Grid(60.0, 6000)};
    const auto rows = sl::convergence_study(p, 1, grids);
    REQUIRE(rows.size() == 4);
    CHECK(std::isnan(rows[0].observed_order));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].observed_order > 1.7);
        CHECK(rows[i].observed_order < 2.3);
    }
    CHECK_THROWS_AS(sl::convergence_study(p, 1, {grids[0], grids[1]}), std::invalid_argument);
}

TEST_CASE("domain truncation dominates when zeta_max is too small") {
    const auto p = natural_units(0.1);
    const auto small = sl::solve_spectrum(p, sl::Grid(10.0, 1000), 5);
    const auto large = sl::solve_spectrum(p, sl::Grid(80.0, 8000), 5);
    const double err_small = std::abs(small[4].sigma_numeric - 4.5);
    const double err_large = std::abs(large[4].sigma_numeric - 4.5);
    CHECK(err_small > 100.0 * err_large);
}
