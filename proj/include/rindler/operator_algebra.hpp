#pragma once

// Numerical checks of the operator manipulations: the Weyl-ordering
// simplification (1/3)(x p^2 + p^2 x + p x p) = p^2 x + i hbar p and the
// Bopp shift realizing the noncommutative algebra [X, Y] = i theta.
//
// Operators are represented on a truncated harmonic-oscillator basis (unit
// mass and frequency).  Hard truncation corrupts the last two basis rows, so
// every identity is asserted on the interior block (indices < N-2) only.

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <complex>
#include <stdexcept>
#include <vector>

#include "rindler/params.hpp"

namespace rindler::algebra {

using Matrix = Eigen::MatrixXcd;

struct MatrixRep {
    int dim = 0;
    Matrix X;
    Matrix P;
    double hbar = 1.0;
};

inline MatrixRep build_rep(int n, double hbar) {
    if (n < 4) throw std::invalid_argument("build_rep: N must be >= 4");
    if (!(hbar > 0.0)) throw std::invalid_argument("build_rep: hbar must be > 0");
    Matrix a = Matrix::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) a(i, i + 1) = std::sqrt(i + 1.0);
    const Matrix ad = a.adjoint();
    MatrixRep rep;
    rep.dim = n;
    rep.hbar = hbar;
    rep.X = std::sqrt(hbar / 2.0) * (a + ad);
    rep.P = std::complex<double>(0.0, 1.0) * std::sqrt(hbar / 2.0) * (ad - a);
    return rep;
}

// Largest entry magnitude over the interior block (both indices < dim-2).
inline double interior_max_abs(const Matrix& m) {
    const int k = static_cast<int>(m.rows()) - 2;
    if (k <= 0) throw std::invalid_argument("interior_max_abs: matrix too small");
    return m.topLeftCorner(k, k).cwiseAbs().maxCoeff();
}

// Weyl-symmetrized x p^2 block: (1/3)(X P^2 + P^2 X + P X P).
inline Matrix weyl_xp2(const MatrixRep& rep) {
    const Matrix p2 = rep.P * rep.P;
    return (rep.X * p2 + p2 * rep.X + rep.P * rep.X * rep.P) / 3.0;
}

// Residual of the simplification against p^2 x + i hbar p, interior block.
inline double weyl_identity_residual(const MatrixRep& rep) {
    const Matrix lhs = weyl_xp2(rep);
    const Matrix rhs = rep.P * rep.P * rep.X +
                       std::complex<double>(0.0, rep.hbar) * rep.P;
    return interior_max_abs(lhs - rhs);
}

// Two-dimensional operators on the N^2 tensor basis after the Bopp shift
// X -> x - (theta/2 hbar) p_y, Y -> y + (theta/2 hbar) p_x.
struct NcOperators {
    int dim = 0;  // N^2
    Matrix X_nc;
    Matrix Y_nc;
    Matrix Px;
    Matrix Py;
    Matrix X;  // unshifted x (x) I, kept for the triviality check
    double hbar = 1.0;
};

inline NcOperators bopp_shift(const MatrixRep& rep_x, const MatrixRep& rep_y, double theta) {
    if (rep_x.dim != rep_y.dim || rep_x.hbar != rep_y.hbar)
        throw std::invalid_argument("bopp_shift: mismatched representations");
    if (theta < 0.0) throw std::invalid_argument("bopp_shift: theta must be >= 0");
    const int n = rep_x.dim;
    const Matrix eye = Matrix::Identity(n, n);
    NcOperators ops;
    ops.dim = n * n;
    ops.hbar = rep_x.hbar;
    ops.X = Eigen::kroneckerProduct(rep_x.X, eye);
    ops.Px = Eigen::kroneckerProduct(rep_x.P, eye);
    ops.Py = Eigen::kroneckerProduct(eye, rep_y.P);
    const double s = theta / (2.0 * rep_x.hbar);
    ops.X_nc = ops.X - s * ops.Py;
    ops.Y_nc = Eigen::kroneckerProduct(eye, rep_y.X) + s * ops.Px;
    return ops;
}

// Interior block of a tensor-product matrix: both oscillator indices < N-2.
inline Matrix tensor_interior(const Matrix& m, int n) {
    const int k = n - 2;
    std::vector<int> keep;
    keep.reserve(k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) keep.push_back(i * n + j);
    Matrix out(keep.size(), keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t s = 0; s < keep.size(); ++s) out(r, s) = m(keep[r], keep[s]);
    return out;
}

inline double tensor_interior_max_abs(const Matrix& m, int n) {
    return tensor_interior(m, n).cwiseAbs().maxCoeff();
}

struct TrivialityResult {
    std::vector<double> spectrum_nc;  // eigenvalues of the Bopp-shifted Hamiltonian
    std::vector<double> spectrum_c;   // eigenvalues after the momentum redefinition
    double constant_offset = 0.0;     // theta^2 m^3 g^2 / (8 hbar^2)
    double max_shift = 0.0;           // max |sorted_nc + offset - sorted_c|
};

// The gravitational Hamiltonian H = p^2/2m + m g x with a Bopp-shifted x
// equals the commutative H with p_y -> p_y - theta m^2 g / (2 hbar), minus
// the c-number theta^2 m^3 g^2 / (8 hbar^2).  Both sides are built
// independently and their interior-projected spectra compared.
inline TrivialityResult nc_gravity_triviality(const MatrixRep& rep_x, const MatrixRep& rep_y,
                                              double m, double g, double theta) {
    if (!(m > 0.0) || !(g > 0.0)) throw std::invalid_argument("nc_gravity_triviality: m, g must be > 0");
    if (theta < 0.0) throw std::invalid_argument("nc_gravity_triviality: theta must be >= 0");
    const int n = rep_x.dim;
    const NcOperators ops = bopp_shift(rep_x, rep_y, theta);
    const double hbar = ops.hbar;
    const double shift = theta * m * m * g / (2.0 * hbar);  // momentum redefinition

    const Matrix kinetic_x = ops.Px * ops.Px / (2.0 * m);
    const Matrix h_nc = kinetic_x + ops.Py * ops.Py / (2.0 * m) + m * g * ops.X_nc;

    const Matrix py_shifted = ops.Py - shift * Matrix::Identity(ops.dim, ops.dim);
    const Matrix h_redef = kinetic_x + py_shifted * py_shifted / (2.0 * m) + m * g * ops.X;

    TrivialityResult res;
    res.constant_offset = theta * theta * m * m * m * g * g / (8.0 * hbar * hbar);

    Eigen::SelfAdjointEigenSolver<Matrix> es_nc(tensor_interior(h_nc, n));
    Eigen::SelfAdjointEigenSolver<Matrix> es_c(tensor_interior(h_redef, n));
    if (es_nc.info() != Eigen::Success || es_c.info() != Eigen::Success)
        throw std::runtime_error("nc_gravity_triviality: eigensolver failed to converge");

    const auto& ev_nc = es_nc.eigenvalues();
    const auto& ev_c = es_c.eigenvalues();
    res.spectrum_nc.assign(ev_nc.data(), ev_nc.data() + ev_nc.size());
    res.spectrum_c.assign(ev_c.data(), ev_c.data() + ev_c.size());
    double worst = 0.0;
    for (Eigen::Index i = 0; i < ev_nc.size(); ++i)
        worst = std::max(worst, std::abs(ev_nc[i] + res.constant_offset - ev_c[i]));
    res.max_shift = worst;
    return res;
}

}  // namespace rindler::algebra
