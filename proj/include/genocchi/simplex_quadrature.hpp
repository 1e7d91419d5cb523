#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>

#include "genocchi/errors.hpp"

namespace genocchi {

/// Tolerance and bisection limit for the adaptive 1-D kernel.
struct QuadratureConfig {
    double tol = 1e-9;  // absolute tolerance per 1-D integral
    int max_depth = 40; // adaptive bisection limit

    void validate() const {
        if (!(tol > 0.0))
            throw std::invalid_argument("QuadratureConfig: tol must be > 0");
        if (max_depth < 1)
            throw std::invalid_argument("QuadratureConfig: max_depth must be >= 1");
    }
};

/// A function on the standard simplex
/// sigma_n = { (t_0,...,t_n) in [0,1]^{n+1} : sum t_i = 1 },
/// evaluated at barycentric points of arity order+1.
struct SimplexIntegrand {
    int order = 0;
    std::function<double(std::span<const double>)> eval;
};

namespace detail {

template <class F>
double adaptive_simpson_rec(const F& f, double a, double m, double b,
                            double fa, double fm, double fb, double whole,
                            double tol, int depth_left) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double diff = left + right - whole;
    if (std::abs(diff) <= 15.0 * tol)
        return left + right + diff / 15.0; // Richardson correction
    if (depth_left <= 0)
        throw MaxDepthExceeded(
            "adaptive Simpson: tolerance not met on [" + std::to_string(a) +
            ", " + std::to_string(b) + "]");
    // Fixed left-then-right combination for bit reproducibility.
    const double l = adaptive_simpson_rec(f, a, lm, m, fa, flm, fm, left,
                                          0.5 * tol, depth_left - 1);
    const double r = adaptive_simpson_rec(f, m, rm, b, fm, frm, fb, right,
                                          0.5 * tol, depth_left - 1);
    return l + r;
}

} // namespace detail

/// Adaptive composite Simpson over [a, b] with local error control: a panel
/// is accepted when the bisected estimate moves by at most 15*tol, and the
/// tolerance halves with each bisection level. Returns exactly 0 for a == b.
///
/// Throws MaxDepthExceeded when some panel still fails at cfg.max_depth.
template <class F>
double integrate_1d(const F& h, double a, double b, const QuadratureConfig& cfg) {
    cfg.validate();
    if (a > b)
        throw std::invalid_argument("integrate_1d: requires a <= b");
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = h(a);
    const double fm = h(m);
    const double fb = h(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adaptive_simpson_rec(h, a, m, b, fa, fm, fb, whole, cfg.tol,
                                        cfg.max_depth);
}

/// Integral of g over the standard simplex sigma_n, n = g.order, computed by
/// peeling one barycentric coordinate at a time: the last coordinate t_m
/// splits into (t_m (1-u), t_m u) and contributes a 1-D integral over u with
/// Jacobian t_m; the order-0 base case is g evaluated at the point (1).
/// Every 1-D level gets the full cfg.tol.
double integrate_simplex(const SimplexIntegrand& g, const QuadratureConfig& cfg);

} // namespace genocchi
