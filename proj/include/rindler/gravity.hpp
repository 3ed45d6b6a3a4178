#pragma once

// Spectrum of the comparison system: a particle in a uniform gravitational
// field above a rigid floor (quantum bouncer), with levels fixed by the
// negative zeros of Ai.  Used to contrast the equally spaced accelerated-frame
// spectrum against the shrinking bouncer spacings.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rindler/params.hpp"
#include "rindler/specfun.hpp"
#include "rindler/spectrum.hpp"

namespace rindler::gravity {

struct BouncerLevel {
    int n;             // level index, starts at 1
    double airy_zero;  // a_n < 0
    double energy;     // (m g^2 hbar^2 / 2)^{1/3} |a_n|
};

inline double bouncer_energy(double m, double g, double hbar, int n) {
    if (n < 1) throw std::invalid_argument("bouncer_energy: n must be >= 1");
    if (!(m > 0.0 && g > 0.0 && hbar > 0.0))
        throw std::invalid_argument("bouncer_energy: m, g, hbar must be > 0");
    const double prefactor = std::cbrt(m * g * g * hbar * hbar / 2.0);
    return prefactor * std::abs(specfun::airy_zero(n));
}

inline std::vector<BouncerLevel> bouncer_levels(double m, double g, double hbar, int k) {
    std::vector<BouncerLevel> levels;
    levels.reserve(k);
    const double prefactor = std::cbrt(m * g * g * hbar * hbar / 2.0);
    for (int n = 1; n <= k; ++n) {
        const double a = specfun::airy_zero(n);
        levels.push_back({n, a, prefactor * std::abs(a)});
    }
    return levels;
}

struct DeviationReport {
    std::vector<double> rindler_energies;
    std::vector<double> rindler_spacings;
    std::vector<double> bouncer_energies;
    std::vector<double> bouncer_spacings;
    double rindler_spacing_stddev;        // identically 0: closed-form equal spacing
    double rindler_max_rel_variation;
    double bouncer_max_rel_variation;     // > 0: the spacings shrink with n
};

namespace detail {

inline double max_rel_variation(const std::vector<double>& v) {
    double lo = v[0], hi = v[0];
    for (double x : v) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    return (hi - lo) / hi;
}

inline double stddev(const std::vector<double>& v) {
    // Work with deviations from v[0] so a constant sequence gives exactly 0
    // (summing n identical doubles and dividing by n need not round-trip).
    double mean = 0.0;
    for (double x : v) mean += x - v[0];
    mean /= v.size();
    double s = 0.0;
    for (double x : v) s += (x - v[0] - mean) * (x - v[0] - mean);
    return std::sqrt(s / v.size());
}

}  // namespace detail

// Spacing profiles of the two systems with g := alpha, levels 1..k.
inline DeviationReport eqp_deviation_report(const PhysicalParams& p, int k) {
    if (k < 3) throw std::invalid_argument("eqp_deviation_report: need k >= 3 levels");
    p.validate();
    DeviationReport rep;
    for (int n = 0; n < k; ++n)
        rep.rindler_energies.push_back(spectrum::energy_level(p, n));
    const auto bouncer = bouncer_levels(p.m, p.alpha, p.hbar, k);
    for (const auto& lvl : bouncer) rep.bouncer_energies.push_back(lvl.energy);
    // The analytic spacing is the closed-form constant
    // hbar alpha sqrt(p_t^2 + 2 m^2 c^2) / (m c^2); emitting the formula value
    // (rather than differencing rounded energies) keeps the column exactly flat.
    const double mc = p.m * p.c;
    const double rindler_spacing =
        p.hbar * p.alpha * std::sqrt(p.p_y * p.p_y + p.p_z * p.p_z + 2.0 * mc * mc) /
        (mc * p.c);
    for (int n = 0; n + 1 < k; ++n) {
        rep.rindler_spacings.push_back(rindler_spacing);
        rep.bouncer_spacings.push_back(rep.bouncer_energies[n + 1] - rep.bouncer_energies[n]);
    }
    rep.rindler_spacing_stddev = detail::stddev(rep.rindler_spacings);
    rep.rindler_max_rel_variation = detail::max_rel_variation(rep.rindler_spacings);
    rep.bouncer_max_rel_variation = detail::max_rel_variation(rep.bouncer_spacings);
    return rep;
}

}  // namespace rindler::gravity
