#pragma once

// Self-contained special-function kernel: Laguerre polynomials, the Airy
// function Ai with its negative zeros, and Gauss-Laguerre quadrature on
// (0, inf).  No external math library.

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace rindler::specfun {

// L_n(x) by the three-term recurrence (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}.
inline double laguerre(int n, double x) {
    if (n < 0) throw std::invalid_argument("laguerre: n must be >= 0");
    if (!std::isfinite(x)) throw std::invalid_argument("laguerre: x must be finite");
    if (n == 0) return 1.0;
    double lkm1 = 1.0;
    double lk = 1.0 - x;
    for (int k = 1; k < n; ++k) {
        const double lkp1 = ((2.0 * k + 1.0 - x) * lk - k * lkm1) / (k + 1.0);
        lkm1 = lk;
        lk = lkp1;
    }
    return lk;
}

// d/dx L_n(x).  Uses x L_n' = n (L_n - L_{n-1}) away from x = 0 and the
// exact Taylor value L_n'(0) = -n at the origin.
inline double laguerre_prime(int n, double x) {
    if (n < 0) throw std::invalid_argument("laguerre_prime: n must be >= 0");
    if (n == 0) return 0.0;
    if (std::abs(x) < 1e-300) return -static_cast<double>(n);
    return n * (laguerre(n, x) - laguerre(n - 1, x)) / x;
}

namespace detail {

inline constexpr double kAi0 = 0.355028053887817239260;   // Ai(0)
inline constexpr double kAiPrime0 = -0.258819403792806798405;  // Ai'(0)
inline constexpr double kSqrtPi = 1.772453850905516027298;

// Maclaurin series Ai(x) = Ai(0) f(x) + Ai'(0) g(x); accurate in doubles on
// roughly x in [-7, 1] (cancellation grows with |x| on the positive side).
inline double ai_maclaurin(double x) {
    double f = 1.0, g = x;
    double tf = 1.0, tg = x;
    const double x3 = x * x * x;
    for (int k = 1; k < 300; ++k) {
        tf *= x3 / ((3.0 * k) * (3.0 * k - 1.0));
        tg *= x3 / ((3.0 * k + 1.0) * (3.0 * k));
        f += tf;
        g += tg;
        if (std::abs(tf) + std::abs(tg) < 1e-18 * (std::abs(f) + std::abs(g)) + 1e-300) break;
    }
    return kAi0 * f + kAiPrime0 * g;
}

// Asymptotic expansion for large positive x, truncated at the smallest term.
inline double ai_asymptotic_pos(double x, double* deriv = nullptr) {
    const double z = (2.0 / 3.0) * x * std::sqrt(x);
    double s = 1.0, sp = 1.0;
    double ck = 1.0, prev = 1e300, sign = 1.0;
    for (int k = 1; k < 60; ++k) {
        ck *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
              (216.0 * k * (2.0 * k - 1.0));
        const double term = ck / std::pow(z, k);
        if (term >= prev) break;
        prev = term;
        sign = -sign;
        s += sign * term;
        sp += sign * term * (6.0 * k + 1.0) / (1.0 - 6.0 * k);
        if (term < 1e-17 * std::abs(s)) break;
    }
    const double pre = std::exp(-z) / (2.0 * kSqrtPi * std::pow(x, 0.25));
    if (deriv) *deriv = -std::pow(x, 0.25) * std::exp(-z) * sp / (2.0 * kSqrtPi);
    return pre * s;
}

// Oscillatory asymptotic expansion on the far negative axis.
inline double ai_asymptotic_neg(double x) {
    const double xm = -x;
    const double z = (2.0 / 3.0) * xm * std::sqrt(xm);
    double P = 1.0, Q = 0.0;
    double term = 1.0, prev = 1e300;
    for (int k = 1; k < 80; ++k) {
        term *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
                (216.0 * k * (2.0 * k - 1.0) * z);
        if (term >= prev) break;
        prev = term;
        switch (k % 4) {
            case 1: Q += term; break;
            case 2: P -= term; break;
            case 3: Q -= term; break;
            default: P += term; break;
        }
        if (term < 1e-17) break;
    }
    const double phase = z + 0.25 * M_PI;
    return (std::sin(phase) * P - std::cos(phase) * Q) / (kSqrtPi * std::pow(xm, 0.25));
}

// Taylor propagation of Ai'' = x Ai from x0 = 12 (seeded by the asymptotic
// expansion) down to the target.  Backward stepping keeps the admixture of
// the growing companion solution damped, so the result stays at machine
// precision across the whole band.
inline double ai_taylor_backward(double x) {
    double x0 = 12.0;
    double fp;
    double f = ai_asymptotic_pos(x0, &fp);
    constexpr int kTerms = 30;
    double a[kTerms + 2];
    while (x0 - x > 1e-14) {
        const double h = -std::min(0.5, x0 - x);
        a[0] = f;
        a[1] = fp;
        for (int n = 0; n <= kTerms - 1; ++n) {
            const double am1 = (n >= 1) ? a[n - 1] : 0.0;
            a[n + 2] = (x0 * a[n] + am1) / ((n + 1.0) * (n + 2.0));
        }
        double nf = 0.0, nfp = 0.0;
        for (int n = kTerms + 1; n >= 1; --n) {
            nf = nf * h + a[n];
            nfp = nfp * h + n * a[n];
        }
        nf = nf * h + a[0];
        f = nf;
        fp = nfp;
        x0 += h;
    }
    return f;
}

}  // namespace detail

// Airy function Ai(x) for any finite real x.
inline double airy_ai(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("airy_ai: x must be finite");
    if (x >= 12.0) return detail::ai_asymptotic_pos(x);
    if (x > 1.0) return detail::ai_taylor_backward(x);
    if (x >= -7.0) return detail::ai_maclaurin(x);
    return detail::ai_asymptotic_neg(x);
}

// k-th negative zero of Ai (k = 1 is the one closest to the origin).
// Bracketed from the asymptotic zero formula, refined by bisection.
inline double airy_zero(int k) {
    if (k < 1) throw std::invalid_argument("airy_zero: k must be >= 1");
    const double t = 3.0 * M_PI * (4.0 * k - 1.0) / 8.0;
    // Asymptotic estimate with its first correction term; the error is a
    // small fraction of the local zero spacing pi / sqrt(|a_k|) already at
    // k = 1, so the bracket below isolates exactly one zero.
    const double guess = -std::pow(t, 2.0 / 3.0) * (1.0 + 5.0 / (48.0 * t * t));
    const double half_width = 0.33 * M_PI / std::sqrt(-guess);
    double lo = guess - half_width;
    double hi = guess + half_width;
    double flo = airy_ai(lo);
    double fhi = airy_ai(hi);
    if (flo * fhi > 0.0) throw std::runtime_error("airy_zero: bracketing failed");
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = airy_ai(mid);
        if (flo * fm <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

// Gauss-Laguerre rule: integrates int_0^inf e^{-x} g(x) dx as sum w_i g(x_i).
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int order = 0;
};

// Nodes are the roots of L_n, found by Newton iteration from the classical
// Stroud-Secrest starting guesses; weights from w_i = x_i / ((n+1) L_{n+1}(x_i))^2.
inline QuadratureRule gauss_laguerre(int n) {
    if (n < 1 || n > 200) throw std::invalid_argument("gauss_laguerre: n out of range [1,200]");
    QuadratureRule rule;
    rule.order = n;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    double x = 0.0;
    for (int i = 0; i < n; ++i) {
        if (i == 0) {
            x = 3.0 / (1.0 + 2.4 * n);
        } else if (i == 1) {
            x += 15.0 / (1.0 + 2.5 * n);
        } else {
            const double step = (1.0 + 2.55 * (i - 1)) / (1.9 * (i - 1));
            x = rule.nodes[i - 1] + step * (rule.nodes[i - 1] - rule.nodes[i - 2]);
        }
        bool converged = false;
        for (int it = 0; it < 100; ++it) {
            const double lx = laguerre(n, x);
            const double dlx = laguerre_prime(n, x);
            const double dx = lx / dlx;
            x -= dx;
            if (std::abs(dx) < 1e-14 * (1.0 + std::abs(x))) {
                converged = true;
                break;
            }
        }
        if (!converged) throw std::runtime_error("gauss_laguerre: Newton iteration stalled");
        rule.nodes[i] = x;
        const double lnp1 = laguerre(n + 1, x);
        rule.weights[i] = x / ((n + 1.0) * (n + 1.0) * lnp1 * lnp1);
    }
    for (int i = 0; i + 1 < n; ++i)
        if (!(rule.nodes[i] < rule.nodes[i + 1]))
            throw std::runtime_error("gauss_laguerre: nodes not increasing");
    return rule;
}

// Computes sum w_i g(x_i), i.e. int_0^inf e^{-x} g(x) dx for the caller's g.
inline double integrate_semiinfinite(const std::function<double(double)>& g,
                                     const QuadratureRule& rule) {
    double sum = 0.0;
    for (int i = 0; i < rule.order; ++i) {
        const double v = g(rule.nodes[i]);
        if (!std::isfinite(v))
            throw std::runtime_error("integrate_semiinfinite: non-finite integrand value");
        sum += rule.weights[i] * v;
    }
    return sum;
}

}  // namespace rindler::specfun
