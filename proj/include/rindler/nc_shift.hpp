#pragma once

// First-order noncommutative correction to the ground-state energy in the
// accelerated frame.  The perturbation has two multiplicative terms, whose
// ground-state expectation reproduces the closed form
//     E'_0 = (alpha theta m / 2 hbar) (1 + p_y^2 / 2 m^2 c^2) p_y,
// plus a second-derivative term which is evaluated separately and reported
// alongside rather than merged in (its size is not small at generic
// parameters; the report flags this).

#include <cmath>
#include <stdexcept>

#include "rindler/params.hpp"
#include "rindler/specfun.hpp"
#include "rindler/spectrum.hpp"

namespace rindler::nc {

struct NCShiftResult {
    double analytic;         // closed-form E'_0
    double constant_part;    // expectation of the two multiplicative terms
    double derivative_part;  // expectation of the second-derivative term
    double total_numeric;    // constant_part + derivative_part
};

inline double shift_analytic(const PhysicalParams& p) {
    p.validate();
    const double c2 = p.c * p.c;
    return (p.alpha * p.theta * p.m / (2.0 * p.hbar)) *
           (1.0 + p.p_y * p.p_y / (2.0 * p.m * p.m * c2)) * p.p_y;
}

// Ground-state expectation <Phi_0|H'|Phi_0> under the measure d zeta on
// (0, inf), term by term.  The derivative term uses d^2/dx^2 =
// gamma (alpha/c^2)^2 d^2/dzeta^2 and integration by parts, with the exact
// phi_0' supplied by the spectrum module.
inline NCShiftResult shift_numeric(const PhysicalParams& p,
                                   const specfun::QuadratureRule& rule) {
    p.validate();
    if (rule.order < 16) throw std::invalid_argument("shift_numeric: rule order must be >= 16");
    const double c2 = p.c * p.c;

    const auto phi = spectrum::eigenfunction(0);
    const auto phi_prime = spectrum::eigenfunction_prime(0);

    // Norm check doubles as the quadrature evaluation of the scalar terms.
    const double norm = specfun::integrate_semiinfinite(
        [&](double z) { return std::exp(z) * phi(z) * phi(z); }, rule);
    const double scalar_coeff = p.alpha * p.theta * p.m * p.p_y / (2.0 * p.hbar) +
                                p.alpha * p.theta * p.p_y * p.p_y * p.p_y /
                                    (4.0 * p.m * p.hbar * c2);

    // <d^2/dzeta^2> = -phi(0) phi'(0) - int_0^inf phi'^2 dzeta.
    const double grad_sq = specfun::integrate_semiinfinite(
        [&](double z) { return std::exp(z) * phi_prime(z) * phi_prime(z); }, rule);
    const double d2_zeta = -phi(0.0) * phi_prime(0.0) - grad_sq;

    const auto dc = derive_constants(p, 0.0);
    const double a_over_c2 = p.alpha / c2;
    const double d2_x = dc.gamma * a_over_c2 * a_over_c2 * d2_zeta;

    NCShiftResult res;
    res.analytic = shift_analytic(p);
    res.constant_part = scalar_coeff * norm;
    res.derivative_part = -(p.alpha * p.theta * p.hbar / (2.0 * c2)) * p.p_y * d2_x;
    res.total_numeric = res.constant_part + res.derivative_part;
    return res;
}

struct ShiftReport {
    NCShiftResult result;
    double ratio_to_spacing;  // analytic shift over the unperturbed spacing hbar omega
    bool discrepancy_flag;    // |derivative_part| >= |constant_part| at nonzero shift
    bool zero_shift;          // p_y or theta vanishes
};

inline ShiftReport shift_report(const PhysicalParams& p, int quadrature_order = 64) {
    const auto rule = specfun::gauss_laguerre(quadrature_order);
    ShiftReport rep;
    rep.result = shift_numeric(p, rule);
    rep.zero_shift = (p.p_y == 0.0 || p.theta == 0.0);
    const double spacing = derive_constants(p, 0.0).omega * p.hbar;
    rep.ratio_to_spacing = rep.zero_shift ? 0.0 : rep.result.analytic / spacing;
    rep.discrepancy_flag =
        !rep.zero_shift && std::abs(rep.result.derivative_part) >= std::abs(rep.result.constant_part);
    return rep;
}

}  // namespace rindler::nc
