#pragma once

// Analytic solution in the accelerated frame: quantized energy levels,
// Laguerre eigenfunctions and the full separated wavefunction.

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include "rindler/params.hpp"
#include "rindler/specfun.hpp"

namespace rindler::spectrum {

// E_n = (n + 1/2) hbar alpha sqrt(p_y^2 + p_z^2 + 2 m^2 c^2) / (m c^2).
inline double energy_level(const PhysicalParams& p, int n) {
    if (n < 0) throw std::invalid_argument("energy_level: n must be >= 0");
    p.validate();
    const double pt2 = p.p_y * p.p_y + p.p_z * p.p_z;
    const double mc = p.m * p.c;
    return (n + 0.5) * p.hbar * p.alpha * std::sqrt(pt2 + 2.0 * mc * mc) / (mc * p.c);
}

// Normalized radial eigenfunction phi_n(zeta) = e^{-zeta/2} L_n(zeta);
// the weight-free Laguerre orthogonality makes the normalization constant 1.
inline std::function<double(double)> eigenfunction(int n) {
    if (n < 0) throw std::invalid_argument("eigenfunction: n must be >= 0");
    return [n](double zeta) { return std::exp(-0.5 * zeta) * specfun::laguerre(n, zeta); };
}

// d/dzeta of phi_n, exact via the Laguerre derivative identity.
inline std::function<double(double)> eigenfunction_prime(int n) {
    if (n < 0) throw std::invalid_argument("eigenfunction_prime: n must be >= 0");
    return [n](double zeta) {
        return std::exp(-0.5 * zeta) *
               (specfun::laguerre_prime(n, zeta) - 0.5 * specfun::laguerre(n, zeta));
    };
}

struct EigenState {
    int n;
    double sigma;   // n + 1/2
    double energy;
    std::function<double(double)> phi;
};

inline EigenState make_state(const PhysicalParams& p, int n) {
    return EigenState{n, n + 0.5, energy_level(p, n), eigenfunction(n)};
}

// psi(x, y, z) = phi_n(zeta(x)) e^{-i p_y y / hbar} e^{-i p_z z / hbar}.
// Rejects positions at or beyond the Rindler horizon.
inline std::function<std::complex<double>(double, double, double)> full_wavefunction(
    const PhysicalParams& p, int n) {
    if (n < 0) throw std::invalid_argument("full_wavefunction: n must be >= 0");
    const auto dc = derive_constants(p, energy_level(p, n));
    const auto maps = coordinate_maps(p, dc);
    const auto phi = eigenfunction(n);
    const double hbar = p.hbar;
    const double p_y = p.p_y, p_z = p.p_z;
    return [=](double x, double y, double z) {
        const double xi = maps.xi_of_x(x);
        if (!(xi > 0.0))
            throw std::domain_error("full_wavefunction: x at or beyond the horizon");
        const std::complex<double> phase =
            std::exp(std::complex<double>(0.0, -(p_y * y + p_z * z) / hbar));
        return phi(maps.zeta_of_xi(xi)) * phase;
    };
}

// Closes the quantization loop: |sigma(E_n) - (n + 1/2)|.
inline double spectrum_consistency(const PhysicalParams& p, int n) {
    const double en = energy_level(p, n);
    const auto dc = derive_constants(p, en);
    return std::abs(dc.sigma - (n + 0.5));
}

}  // namespace rindler::spectrum
