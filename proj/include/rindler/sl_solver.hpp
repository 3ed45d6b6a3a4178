#pragma once

// Independent numerical route to the spectrum: conservative finite-difference
// discretization of the singular Sturm-Liouville problem
//     -(zeta Phi')' + (zeta/4) Phi = sigma Phi   on (0, zeta_max)
// on a cell-centered grid, with eigenvalues from Sturm-sequence bisection.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "rindler/params.hpp"

namespace rindler::sl {

struct Grid {
    double zeta_max;
    int n_points;
    double h;

    Grid(double zeta_max_, int n_points_) : zeta_max(zeta_max_), n_points(n_points_) {
        if (!(zeta_max > 0.0)) throw std::invalid_argument("Grid: zeta_max must be > 0");
        if (n_points < 50) throw std::invalid_argument("Grid: need at least 50 points");
        h = zeta_max / n_points;
    }

    // Cell center zeta_i = (i + 1/2) h.
    double node(int i) const { return (i + 0.5) * h; }
    // Cell face zeta_{i-1/2} = i h; face 0 sits on the singular endpoint.
    double face(int i) const { return i * h; }
};

struct TridiagonalSystem {
    std::vector<double> diag;
    std::vector<double> offdiag;  // length diag.size() - 1
    Grid grid;

    // Lower bound on every eigenvalue from the Gershgorin disks.
    double gershgorin_lower_bound() const {
        double lb = std::numeric_limits<double>::infinity();
        const std::size_t n = diag.size();
        for (std::size_t i = 0; i < n; ++i) {
            double r = 0.0;
            if (i > 0) r += std::abs(offdiag[i - 1]);
            if (i + 1 < n) r += std::abs(offdiag[i]);
            lb = std::min(lb, diag[i] - r);
        }
        return lb;
    }

    double gershgorin_upper_bound() const {
        double ub = -std::numeric_limits<double>::infinity();
        const std::size_t n = diag.size();
        for (std::size_t i = 0; i < n; ++i) {
            double r = 0.0;
            if (i > 0) r += std::abs(offdiag[i - 1]);
            if (i + 1 < n) r += std::abs(offdiag[i]);
            ub = std::max(ub, diag[i] + r);
        }
        return ub;
    }
};

// Flux form: row i couples cell averages through face coefficients zeta_{i±1/2}/h^2.
// The singular endpoint needs no special casing (the face coefficient vanishes
// there) and the right boundary is homogeneous Dirichlet.
inline TridiagonalSystem discretize_sl(const Grid& grid) {
    const int n = grid.n_points;
    TridiagonalSystem sys{std::vector<double>(n), std::vector<double>(n - 1), grid};
    const double h2 = grid.h * grid.h;
    for (int i = 0; i < n; ++i)
        sys.diag[i] = (grid.face(i) + grid.face(i + 1)) / h2 + grid.node(i) / 4.0;
    for (int i = 0; i + 1 < n; ++i) sys.offdiag[i] = -grid.face(i + 1) / h2;
    return sys;
}

// Number of eigenvalues of T strictly below x (Sturm sequence / LDL^T count).
inline int sturm_count(const TridiagonalSystem& t, double x) {
    const std::size_t n = t.diag.size();
    int count = 0;
    double d = t.diag[0] - x;
    // A zero pivot means x is an eigenvalue of a leading submatrix; treat it
    // as (tiny) negative so it is both counted and safe to divide by.
    if (d == 0.0) d = -1e-300;
    if (d < 0.0) ++count;
    for (std::size_t i = 1; i < n; ++i) {
        d = t.diag[i] - x - t.offdiag[i - 1] * t.offdiag[i - 1] / d;
        if (d == 0.0) d = -1e-300;
        if (d < 0.0) ++count;
    }
    return count;
}

// Smallest k eigenvalues, each bracketed by bisection on the Sturm count
// to 1e-12 absolute.
inline std::vector<double> eig_tridiagonal(const TridiagonalSystem& t, int k) {
    const int n = static_cast<int>(t.diag.size());
    if (k < 1 || k > n) throw std::invalid_argument("eig_tridiagonal: k out of range");
    const double lb = t.gershgorin_lower_bound();
    const double ub = t.gershgorin_upper_bound();
    std::vector<double> eigs(k);
    for (int j = 0; j < k; ++j) {
        double lo = lb, hi = ub;
        int it = 0;
        const int max_it = 2000;
        while (hi - lo > 1e-12 && it++ < max_it) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;  // interval at rounding resolution
            if (sturm_count(t, mid) >= j + 1)
                hi = mid;
            else
                lo = mid;
        }
        if (it >= max_it) throw std::runtime_error("eig_tridiagonal: bisection did not converge");
        eigs[j] = 0.5 * (lo + hi);
    }
    return eigs;
}

// Eigenvector by inverse iteration at a converged eigenvalue estimate.
// The shifted system is solved by Gaussian elimination with partial pivoting
// (tridiagonal plus one fill-in superdiagonal).
inline std::vector<double> eig_vector(const TridiagonalSystem& t, double lambda) {
    const int n = static_cast<int>(t.diag.size());
    auto solve_shifted = [&](std::vector<double> v) {
        std::vector<double> d(n), e(n - 1 > 0 ? n - 1 : 0), f(n > 2 ? n - 2 : 0, 0.0);
        std::vector<double> sub(n - 1 > 0 ? n - 1 : 0);
        for (int i = 0; i < n; ++i) d[i] = t.diag[i] - lambda;
        for (int i = 0; i + 1 < n; ++i) {
            e[i] = t.offdiag[i];
            sub[i] = t.offdiag[i];
        }
        // forward elimination
        for (int i = 0; i + 1 < n; ++i) {
            double piv = d[i], low = sub[i];
            if (std::abs(low) > std::abs(piv)) {
                // swap rows i and i+1
                std::swap(d[i], sub[i]);
                const double tmp = e[i];
                e[i] = d[i + 1];
                d[i + 1] = tmp;
                if (i + 2 < n) {
                    f[i] = e[i + 1];
                    e[i + 1] = 0.0;
                }
                std::swap(v[i], v[i + 1]);
                piv = d[i];
                low = sub[i];
            }
            if (piv == 0.0) piv = 1e-300;
            const double mult = low / piv;
            d[i + 1] -= mult * e[i];
            if (i + 2 < n) e[i + 1] -= mult * f[i];
            v[i + 1] -= mult * v[i];
            d[i] = piv;
        }
        // back substitution
        for (int i = n - 1; i >= 0; --i) {
            double s = v[i];
            if (i + 1 < n) s -= e[i] * v[i + 1];
            if (i + 2 < n) s -= f[i] * v[i + 2];
            double piv = d[i];
            if (piv == 0.0) piv = 1e-300;
            v[i] = s / piv;
        }
        return v;
    };

    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = 1.0 / std::sqrt(n + i + 1.0);  // deterministic start
    for (int iter = 0; iter < 4; ++iter) {
        v = solve_shifted(std::move(v));
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw std::runtime_error("eig_vector: inverse iteration broke down");
        for (double& x : v) x /= norm;
    }
    if (v[0] < 0.0)
        for (double& x : v) x = -x;
    return v;
}

struct NumericLevel {
    double sigma_numeric;
    double energy_numeric;
};

// sigma eigenvalues mapped to energies through E = sigma sqrt(gamma) hbar^2 alpha^2 / (2 m c^4).
inline std::vector<NumericLevel> solve_spectrum(const PhysicalParams& p, const Grid& grid, int k) {
    if (k < 1) throw std::invalid_argument("solve_spectrum: k must be >= 1");
    const auto dc = derive_constants(p, 0.0);  // gamma is independent of E
    const double c2 = p.c * p.c;
    const double scale = std::sqrt(dc.gamma) * p.hbar * p.hbar * p.alpha * p.alpha /
                         (2.0 * p.m * c2 * c2);
    const auto sigmas = eig_tridiagonal(discretize_sl(grid), k);
    std::vector<NumericLevel> out;
    out.reserve(sigmas.size());
    for (double s : sigmas) out.push_back({s, s * scale});
    return out;
}

struct ConvergenceRow {
    double h;
    double zeta_max;
    double max_abs_error;  // over the k requested sigma values
    double observed_order;  // log2(e(2h)/e(h)); NaN on the first row
};

inline std::vector<ConvergenceRow> convergence_study(const PhysicalParams& p, int k,
                                                     const std::vector<Grid>& grids) {
    if (grids.size() < 3)
        throw std::invalid_argument("convergence_study: need at least 3 grids");
    std::vector<ConvergenceRow> rows;
    double prev_err = std::numeric_limits<double>::quiet_NaN();
    for (const Grid& g : grids) {
        const auto levels = solve_spectrum(p, g, k);
        double err = 0.0;
        for (int n = 0; n < k; ++n)
            err = std::max(err, std::abs(levels[n].sigma_numeric - (n + 0.5)));
        const double order = std::isnan(prev_err)
                                 ? std::numeric_limits<double>::quiet_NaN()
                                 : std::log2(prev_err / err);
        rows.push_back({g.h, g.zeta_max, err, order});
        prev_err = err;
    }
    return rows;
}

}  // namespace rindler::sl
