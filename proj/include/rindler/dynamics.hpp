#pragma once

// Classical side of the comparison: trajectories under the exact
// accelerated-frame Hamiltonian and its truncations, integrated with fixed-step
// RK4, plus the momentum-dependent effective acceleration.

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rindler/params.hpp"

namespace rindler::dynamics {

struct PhaseState {
    double x = 0.0;
    std::array<double, 3> p{0.0, 0.0, 0.0};
    double t = 0.0;

    double p_squared() const { return p[0] * p[0] + p[1] * p[1] + p[2] * p[2]; }
};

enum class HamiltonianVariant {
    Full,     // m c^2 (1 + alpha x/c^2) sqrt(1 + p^2/m^2 c^2)
    Leading,  // m c^2 + p^2/2m + m alpha x
    Nlo,      // Leading + alpha x p^2 / (2 m c^2)
    Gravity,  // m c^2 + p^2/2m + m g x, with g := alpha
};

inline void require_inside_wedge(const PhaseState& s, const PhysicalParams& p) {
    if (!(1.0 + p.alpha * s.x / (p.c * p.c) > 0.0))
        throw std::domain_error("dynamics: state at or beyond the Rindler horizon");
}

inline double hamiltonian(const PhaseState& s, const PhysicalParams& p,
                          HamiltonianVariant variant) {
    p.validate();
    require_inside_wedge(s, p);
    const double c2 = p.c * p.c;
    const double p2 = s.p_squared();
    const double rest = p.m * c2;
    switch (variant) {
        case HamiltonianVariant::Full:
            return rest * (1.0 + p.alpha * s.x / c2) * std::sqrt(1.0 + p2 / (p.m * p.m * c2));
        case HamiltonianVariant::Leading:
            return rest + p2 / (2.0 * p.m) + p.m * p.alpha * s.x;
        case HamiltonianVariant::Nlo:
            return rest + p2 / (2.0 * p.m) + p.m * p.alpha * s.x +
                   p.alpha * s.x * p2 / (2.0 * p.m * c2);
        case HamiltonianVariant::Gravity:
            return rest + p2 / (2.0 * p.m) + p.m * p.alpha * s.x;
    }
    throw std::invalid_argument("hamiltonian: unknown variant");
}

// alpha (1 + p^2 / 2 m^2 c^2): the acceleration an accelerated observer
// attributes to a particle of momentum p.
inline double effective_acceleration(const std::array<double, 3>& p_vec,
                                     const PhysicalParams& p) {
    p.validate();
    const double p2 = p_vec[0] * p_vec[0] + p_vec[1] * p_vec[1] + p_vec[2] * p_vec[2];
    return p.alpha * (1.0 + p2 / (2.0 * p.m * p.m * p.c * p.c));
}

namespace detail {

struct Derivs {
    double xdot;
    double pxdot;
};

// Analytic Hamilton equations per variant; p_y, p_z are constants of motion.
inline Derivs hamilton_rhs(double x, double px, double py, double pz,
                           const PhysicalParams& p, HamiltonianVariant variant) {
    const double c2 = p.c * p.c;
    const double p2 = px * px + py * py + pz * pz;
    switch (variant) {
        case HamiltonianVariant::Full: {
            const double root = std::sqrt(1.0 + p2 / (p.m * p.m * c2));
            const double xi = 1.0 + p.alpha * x / c2;
            return {xi * px / (p.m * root), -p.m * p.alpha * root};
        }
        case HamiltonianVariant::Leading:
            return {px / p.m, -p.m * p.alpha};
        case HamiltonianVariant::Nlo:
            return {px / p.m + p.alpha * x * px / (p.m * c2),
                    -p.m * p.alpha - p.alpha * p2 / (2.0 * p.m * c2)};
        case HamiltonianVariant::Gravity:
            return {px / p.m, -p.m * p.alpha};
    }
    throw std::invalid_argument("hamilton_rhs: unknown variant");
}

}  // namespace detail

struct TrajectorySample {
    double t;
    double x;
    double p_x;
    double p_y;
    double p_z;
    double energy;
    double drift;  // |H(t) - H(0)| / |H(0)|
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    double max_drift = 0.0;
};

inline Trajectory integrate(const PhaseState& state0, const PhysicalParams& p,
                            HamiltonianVariant variant, double total_time, double dt) {
    p.validate();
    if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be > 0");
    if (!(total_time >= dt)) throw std::invalid_argument("integrate: T must be >= dt");
    require_inside_wedge(state0, p);

    const double e0 = hamiltonian(state0, p, variant);
    const long n_steps = static_cast<long>(std::llround(total_time / dt));

    Trajectory traj;
    traj.samples.reserve(n_steps + 1);
    double x = state0.x, px = state0.p[0];
    const double py = state0.p[1], pz = state0.p[2];
    double t = state0.t;

    auto record = [&](double time, double xx, double pp) {
        PhaseState s{xx, {pp, py, pz}, time};
        const double e = hamiltonian(s, p, variant);
        const double drift = std::abs(e - e0) / std::abs(e0);
        traj.max_drift = std::max(traj.max_drift, drift);
        traj.samples.push_back({time, xx, pp, py, pz, e, drift});
    };
    record(t, x, px);

    for (long step = 0; step < n_steps; ++step) {
        const auto k1 = detail::hamilton_rhs(x, px, py, pz, p, variant);
        const auto k2 = detail::hamilton_rhs(x + 0.5 * dt * k1.xdot, px + 0.5 * dt * k1.pxdot,
                                             py, pz, p, variant);
        const auto k3 = detail::hamilton_rhs(x + 0.5 * dt * k2.xdot, px + 0.5 * dt * k2.pxdot,
                                             py, pz, p, variant);
        const auto k4 = detail::hamilton_rhs(x + dt * k3.xdot, px + dt * k3.pxdot,
                                             py, pz, p, variant);
        x += dt / 6.0 * (k1.xdot + 2.0 * k2.xdot + 2.0 * k3.xdot + k4.xdot);
        px += dt / 6.0 * (k1.pxdot + 2.0 * k2.pxdot + 2.0 * k3.pxdot + k4.pxdot);
        t += dt;
        if (!std::isfinite(x) || !std::isfinite(px))
            throw std::runtime_error("integrate: non-finite state");
        if (!(1.0 + p.alpha * x / (p.c * p.c) > 0.0))
            throw std::runtime_error("integrate: trajectory crossed the Rindler horizon");
        record(t, x, px);
    }
    return traj;
}

// Magnitude of the initial acceleration from the first three samples,
// via the second central difference of x(t).
inline double measured_initial_acceleration(const Trajectory& traj) {
    if (traj.samples.size() < 3)
        throw std::invalid_argument("measured_initial_acceleration: need >= 3 samples");
    const double dt = traj.samples[1].t - traj.samples[0].t;
    const double xddot = (traj.samples[2].x - 2.0 * traj.samples[1].x + traj.samples[0].x) /
                         (dt * dt);
    return -xddot;  // the particle falls toward the horizon; report the magnitude
}

struct ClassicalReportRow {
    double p_transverse;
    double acc_nlo;        // measured under the NLO Hamiltonian
    double acc_gravity;    // measured under the uniform-field Hamiltonian
    double acc_predicted;  // effective acceleration formula
};

struct ClassicalReport {
    std::vector<ClassicalReportRow> rows;
    double nlo_spread;      // max - min over the NLO column
    double gravity_spread;  // max - min over the gravity column
};

// Initial accelerations at x = 0, p_x = 0 for a list of transverse momenta.
inline ClassicalReport eqp_classical_report(const PhysicalParams& p,
                                            const std::vector<double>& p_list,
                                            double total_time, double dt) {
    if (p_list.size() < 2)
        throw std::invalid_argument("eqp_classical_report: need at least 2 momenta");
    ClassicalReport rep;
    double nlo_min = 0.0, nlo_max = 0.0, grav_min = 0.0, grav_max = 0.0;
    bool first = true;
    for (double q : p_list) {
        PhaseState s0{0.0, {0.0, q, 0.0}, 0.0};
        const auto nlo = integrate(s0, p, HamiltonianVariant::Nlo, total_time, dt);
        const auto grav = integrate(s0, p, HamiltonianVariant::Gravity, total_time, dt);
        ClassicalReportRow row;
        row.p_transverse = q;
        row.acc_nlo = measured_initial_acceleration(nlo);
        row.acc_gravity = measured_initial_acceleration(grav);
        row.acc_predicted = effective_acceleration({0.0, q, 0.0}, p);
        rep.rows.push_back(row);
        if (first) {
            nlo_min = nlo_max = row.acc_nlo;
            grav_min = grav_max = row.acc_gravity;
            first = false;
        } else {
            nlo_min = std::min(nlo_min, row.acc_nlo);
            nlo_max = std::max(nlo_max, row.acc_nlo);
            grav_min = std::min(grav_min, row.acc_gravity);
            grav_max = std::max(grav_max, row.acc_gravity);
        }
    }
    rep.nlo_spread = nlo_max - nlo_min;
    rep.gravity_spread = grav_max - grav_min;
    return rep;
}

}  // namespace rindler::dynamics
