#include <catch_amalgamated.hpp>

#include <cmath>

#include "rindler/dynamics.hpp"
#include "rindler/params.hpp"

using namespace rindler;
using namespace rindler::dynamics;
using Catch::Approx;

TEST_CASE("hamiltonian variants at sample states") {
    const auto p = natural_units();
    const PhaseState rest{0.0, {0.0, 0.0, 0.0}, 0.0};
    for (auto v : {HamiltonianVariant::Full, HamiltonianVariant::Leading,
                   HamiltonianVariant::Nlo, HamiltonianVariant::Gravity}) {
        CHECK(hamiltonian(rest, p, v) == Approx(1.0).epsilon(1e-14));
    }

    const PhaseState s{0.5, {0.1, 0.0, 0.0}, 0.0};
    CHECK(hamiltonian(s, p, HamiltonianVariant::Leading) == Approx(1.505).epsilon(1e-13));
    CHECK(hamiltonian(s, p, HamiltonianVariant::Nlo) -
              hamiltonian(s, p, HamiltonianVariant::Leading) ==
          Approx(0.0025).epsilon(1e-12));

    const PhaseState outside{-1.5, {0.0, 0.0, 0.0}, 0.0};
    CHECK_THROWS_AS(hamiltonian(outside, p, HamiltonianVariant::Full), std::domain_error);
}

TEST_CASE("full hamiltonian deviates from NLO at order 1/c^2 via the p^4 term") {
    PhysicalParams p = natural_units();
    const PhaseState s{0.2, {0.15, 0.1, 0.0}, 0.0};
    auto diff = [&](double c) {
        PhysicalParams q = p;
        q.c = c;
        return hamiltonian(s, q, HamiltonianVariant::Full) -
               hamiltonian(s, q, HamiltonianVariant::Nlo);
    };
    auto p4_term = [&](double c) {
        const double p2 = s.p_squared();
        return -p2 * p2 / (8.0 * p.m * p.m * p.m * c * c) * (1.0 + p.alpha * s.x / (c * c));
    };
    // The leading residual is the known p^4/c^2 piece; what remains after
    // removing it shrinks ~16x under c -> 2c.
    const double r1 = diff(4.0) - p4_term(4.0);
    const double r2 = diff(8.0) - p4_term(8.0);
    CHECK(r1 / r2 == Approx(16.0).epsilon(0.15));
    // And the raw difference itself scales like 1/c^2.
    CHECK(diff(4.0) / diff(8.0) == Approx(4.0).epsilon(0.05));
}

TEST_CASE("effective acceleration") {
    const auto p = natural_units();
    CHECK(effective_acceleration({0.0, 0.0, 0.0}, p) == Approx(1.0));
    CHECK(effective_acceleration({0.1, 0.0, 0.0}, p) == Approx(1.005).epsilon(1e-13));
    const double a1 = effective_acceleration({0.1, 0.0, 0.0}, p);
    const double a2 = effective_acceleration({0.2, 0.0, 0.0}, p);
    CHECK((a2 - a1) / p.alpha == Approx(3.0 * 0.01 / 2.0).epsilon(1e-12));
}

TEST_CASE("free fall under the uniform-field variant") {
    const auto p = natural_units(1.0);
    const PhaseState s0{0.0, {0.0, 0.0, 0.0}, 0.0};
    const auto traj = integrate(s0, p, HamiltonianVariant::Gravity, 0.9, 1e-3);
    // x(t) = -g t^2 / 2; stay clear of the horizon at x = -1.
    const auto& last = traj.samples.back();
    CHECK(last.x == Approx(-0.5 * last.t * last.t).margin(1e-8));
}

TEST_CASE("energy conservation over long runs") {
    const auto p = natural_units(0.1);  // horizon at x = -10, free fall stays inside
    const PhaseState s0{0.0, {0.05, 0.1, 0.0}, 0.0};
    for (auto v : {HamiltonianVariant::Full, HamiltonianVariant::Leading,
                   HamiltonianVariant::Nlo, HamiltonianVariant::Gravity}) {
        const auto traj = integrate(s0, p, v, 10.0, 1e-3);
        CHECK(traj.max_drift < 1e-8);
    }
}

TEST_CASE("horizon crossing aborts the integration") {
    const auto p = natural_units(1.0);
    const PhaseState s0{-0.9, {0.0, 0.0, 0.0}, 0.0};
    CHECK_THROWS_AS(integrate(s0, p, HamiltonianVariant::Leading, 2.0, 1e-3),
                    std::runtime_error);
    CHECK_THROWS_AS(integrate(s0, p, HamiltonianVariant::Leading, 2.0, -1.0),
                    std::invalid_argument);
}

TEST_CASE("measured initial acceleration matches the effective-acceleration formula") {
    const auto p = natural_units(0.1);
    for (double q : {0.0, 0.1, 0.25}) {
        const PhaseState s0{0.0, {0.0, q, 0.0}, 0.0};
        const auto traj = integrate(s0, p, HamiltonianVariant::Nlo, 0.01, 1e-3);
        const double measured = measured_initial_acceleration(traj);
        const double predicted = effective_acceleration({0.0, q, 0.0}, p);
        CHECK(measured == Approx(predicted).epsilon(1e-6));
    }
}

TEST_CASE("classical equivalence-principle report") {
    const auto p = natural_units(0.1);
    SECTION("momentum spread shows up only in the NLO column") {
        const auto rep = eqp_classical_report(p, {0.0, 0.1, 0.2}, 0.01, 1e-3);
        REQUIRE(rep.rows.size() == 3);
        // The initial acceleration is a second central difference with
        // O(dt^2) truncation error, ~1e-8 relative at dt = 1e-3.
        CHECK(rep.rows[0].acc_nlo == Approx(0.1).epsilon(1e-6));
        CHECK(rep.rows[1].acc_nlo / rep.rows[0].acc_nlo == Approx(1.005).epsilon(1e-7));
        CHECK(rep.rows[2].acc_nlo / rep.rows[0].acc_nlo == Approx(1.02).epsilon(1e-7));
        CHECK(rep.gravity_spread < 1e-9);
        CHECK(rep.nlo_spread > 1e-4);
    }
    SECTION("degenerate inputs") {
        CHECK_THROWS_AS(eqp_classical_report(p, {0.1}, 0.01, 1e-3), std::invalid_argument);
        const auto rep = eqp_classical_report(p, {0.1, 0.1, 0.1}, 0.01, 1e-3);
        CHECK(rep.nlo_spread == 0.0);
    }
}
