#pragma once

// Physical parameters of the accelerated-frame problem and the derived
// spectral constants shared by every other component.

#include <cmath>
#include <stdexcept>
#include <string>

namespace rindler {

struct PhysicalParams {
    double m = 1.0;      // particle mass
    double alpha = 1.0;  // proper acceleration of the frame (x-direction)
    double c = 1.0;      // speed of light
    double hbar = 1.0;
    double p_y = 0.0;    // conserved transverse momenta
    double p_z = 0.0;
    double theta = 0.0;  // x-y noncommutativity scale, >= 0

    void validate() const {
        if (!(std::isfinite(m) && std::isfinite(alpha) && std::isfinite(c) &&
              std::isfinite(hbar) && std::isfinite(p_y) && std::isfinite(p_z) &&
              std::isfinite(theta)))
            throw std::invalid_argument("PhysicalParams: non-finite field");
        if (m <= 0.0) throw std::invalid_argument("PhysicalParams: m must be > 0");
        if (c <= 0.0) throw std::invalid_argument("PhysicalParams: c must be > 0");
        if (hbar <= 0.0) throw std::invalid_argument("PhysicalParams: hbar must be > 0");
        if (alpha <= 0.0) throw std::invalid_argument("PhysicalParams: alpha must be > 0");
        if (theta < 0.0) throw std::invalid_argument("PhysicalParams: theta must be >= 0");
    }
};

// Canonical test configuration: m = c = hbar = 1.
inline PhysicalParams natural_units(double alpha = 1.0, double theta = 0.0) {
    PhysicalParams p;
    p.alpha = alpha;
    p.theta = theta;
    p.validate();
    return p;
}

// Constants of the separated radial problem.  kappa and sigma depend on the
// trial energy E; gamma and omega are fixed by the parameters alone.
struct DerivedConstants {
    double E_tilde;  // rest energy plus transverse kinetic energy
    double kappa;    // linear in E
    double gamma;    // > 0
    double sigma;    // kappa / sqrt(gamma)
    double omega;    // level-spacing frequency, sqrt(2) alpha / c
};

inline DerivedConstants derive_constants(const PhysicalParams& p, double E) {
    p.validate();
    if (!std::isfinite(E))
        throw std::invalid_argument("derive_constants: E must be finite");
    const double c2 = p.c * p.c;
    const double c4 = c2 * c2;
    const double ha2 = p.hbar * p.hbar * p.alpha * p.alpha;
    DerivedConstants d;
    d.E_tilde = p.m * c2 + (p.p_y * p.p_y + p.p_z * p.p_z) / (2.0 * p.m);
    d.kappa = 2.0 * p.m * c4 * E / ha2;
    d.gamma = 8.0 * p.m * c4 * d.E_tilde / ha2;
    d.sigma = d.kappa / std::sqrt(d.gamma);
    d.omega = std::sqrt(2.0) * p.alpha / p.c;
    return d;
}

// Maps between the lab coordinate x, the horizon-adapted variable
// xi = 1 + alpha x / c^2 and the rescaled radial variable zeta = sqrt(gamma) xi.
// Inverse maps reject xi <= 0 (beyond the Rindler horizon).
struct CoordinateMaps {
    double alpha_over_c2;
    double sqrt_gamma;

    double xi_of_x(double x) const { return 1.0 + alpha_over_c2 * x; }
    double x_of_xi(double xi) const {
        require_inside(xi);
        return (xi - 1.0) / alpha_over_c2;
    }
    double zeta_of_xi(double xi) const { return sqrt_gamma * xi; }
    double xi_of_zeta(double zeta) const {
        require_inside(zeta);
        return zeta / sqrt_gamma;
    }
    double zeta_of_x(double x) const { return zeta_of_xi(xi_of_x(x)); }
    double x_of_zeta(double zeta) const { return x_of_xi(xi_of_zeta(zeta)); }

private:
    static void require_inside(double v) {
        if (!(v > 0.0))
            throw std::domain_error("CoordinateMaps: point at or beyond the Rindler horizon");
    }
};

inline CoordinateMaps coordinate_maps(const PhysicalParams& p, const DerivedConstants& d) {
    p.validate();
    if (!(d.gamma > 0.0))
        throw std::invalid_argument("coordinate_maps: gamma must be > 0");
    return CoordinateMaps{p.alpha / (p.c * p.c), std::sqrt(d.gamma)};
}

}  // namespace rindler
