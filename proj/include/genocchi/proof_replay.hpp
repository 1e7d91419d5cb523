#pragma once

#include <string>
#include <vector>

#include "genocchi/oracle.hpp"
#include "genocchi/simplex_quadrature.hpp"

namespace genocchi {

/// Affine pullback of f on [a, b] onto the reference interval [-1, 1]:
/// g(t) = f((a+b)/2 + (b-a)/2 * t), with chain-rule-scaled derivatives
/// g^(k)(t) = ((b-a)/2)^k f^(k)(.) and a correspondingly scaled sup bound.
///
/// Throws EmptyInterval if a >= b.
FunctionOracle rescale_to_unit(const FunctionOracle& oracle, double a, double b);

/// Simpson defect of a function g on [-1, 1], as a function of the
/// half-width t in [0, 1]:
///   defect(t) = integral_{-t}^{t} g - (t/3) (g(-t) + 4 g(0) + g(t)).
/// defect(1) is (2/(b-a)) times the error of the three-point Simpson rule
/// for the original function when g came from rescale_to_unit.
double simpson_defect(const FunctionOracle& g, double t, const QuadratureConfig& cfg);

/// The pinned defect p(t) = defect(t) - t^5 defect(1) and its first three
/// derivatives. p vanishes to second order at 0 and to order zero at 1,
/// which is what drives the divided-difference chain in replay().
/// Derivatives come from closed-form differentiation of the defect; the
/// third one needs g to be three times differentiable.
struct PinnedDefect {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double d3 = 0.0;
};

PinnedDefect pinned_defect(const FunctionOracle& g, double t,
                           const QuadratureConfig& cfg);

/// One verified identity or inequality of the replay.
/// Equality checks pass when |lhs - rhs| <= tolerance; upper-bound checks
/// pass when lhs <= rhs + tolerance.
struct ReplayCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double tolerance = 0.0;
    bool is_upper_bound = false;
    bool pass = false;
};

/// Full record of a replay run over one function and interval.
struct ReplayReport {
    std::string function_label;
    double a = 0.0;
    double b = 0.0;
    double sup_d4 = 0.0;      // bound on |g''''| for the rescaled function
    Rigor sup_rigor = Rigor::sampled;
    std::vector<ReplayCheck> checks;
    bool overall = false;     // conjunction of the individual passes
};

/// Numerically re-execute the constructive derivation of the Simpson error
/// bound for f on [a, b] and report every checkable step:
///  (1) the pinned defect and its first two derivatives vanish where the
///      construction pins them (p(0), p(1), p'(0), p''(0) ~ 0, tol 1e-8);
///  (2) the third divided difference of p over the nodes (0, 0, 0, 1) is 0,
///      link by link through the confluent table (each link tol 1e-6);
///  (3) the simplex integral of p''' over those nodes is 0 (tol 1e-6),
///      evaluated through the 1-D marginal with weight (1-s)^2/2;
///  (4) |90 * defect(1)| <= sup|g''''| + 1e-8.
/// A failed check sets its pass flag false rather than throwing.
///
/// Requires oracle.max_order() >= 4.
ReplayReport replay(const FunctionOracle& oracle, double a, double b,
                    const QuadratureConfig& cfg,
                    const std::string& function_label = "f");

} // namespace genocchi
