#include "genocchi/proof_replay.hpp"

#include <cmath>
#include <utility>

#include "genocchi/divided_differences.hpp"

namespace genocchi {

FunctionOracle rescale_to_unit(const FunctionOracle& oracle, double a, double b) {
    if (!(a < b))
        throw EmptyInterval("rescale_to_unit: requires a < b");
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    FunctionOracle::SupBoundFn sup;
    if (oracle.has_sup_bound()) {
        sup = [oracle, mid, half](int k, double lo, double hi) {
            SupBound inner = oracle.sup_bound(k, mid + half * lo, mid + half * hi);
            return SupBound{std::pow(half, k) * inner.value, inner.rigor};
        };
    }
    return FunctionOracle(
        [oracle, mid, half](double t) { return oracle.value(mid + half * t); },
        oracle.max_order(),
        [oracle, mid, half](int k, double t) {
            return std::pow(half, k) * oracle.derivative(k, mid + half * t);
        },
        std::move(sup));
}

namespace {

double defect_d1(const FunctionOracle& g, double t) {
    return (2.0 / 3.0) * (g.value(t) + g.value(-t)) - (4.0 / 3.0) * g.value(0.0) -
           (t / 3.0) * (g.derivative(1, t) - g.derivative(1, -t));
}

double defect_d2(const FunctionOracle& g, double t) {
    return (1.0 / 3.0) * (g.derivative(1, t) - g.derivative(1, -t)) -
           (t / 3.0) * (g.derivative(2, t) + g.derivative(2, -t));
}

double pinned_d3(const FunctionOracle& g, double t, double defect1) {
    return -(t / 3.0) * (g.derivative(3, t) - g.derivative(3, -t)) -
           60.0 * t * t * defect1;
}

void check_unit_range(double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("defect half-width t must lie in [0, 1]");
}

} // namespace

double simpson_defect(const FunctionOracle& g, double t, const QuadratureConfig& cfg) {
    check_unit_range(t);
    const double integral =
        integrate_1d([&g](double x) { return g.value(x); }, -t, t, cfg);
    return integral - (t / 3.0) * (g.value(-t) + 4.0 * g.value(0.0) + g.value(t));
}

PinnedDefect pinned_defect(const FunctionOracle& g, double t,
                           const QuadratureConfig& cfg) {
    check_unit_range(t);
    const double defect1 = simpson_defect(g, 1.0, cfg);
    PinnedDefect p;
    p.value = simpson_defect(g, t, cfg) - std::pow(t, 5) * defect1;
    p.d1 = defect_d1(g, t) - 5.0 * std::pow(t, 4) * defect1;
    p.d2 = defect_d2(g, t) - 20.0 * std::pow(t, 3) * defect1;
    p.d3 = pinned_d3(g, t, defect1);
    return p;
}

ReplayReport replay(const FunctionOracle& oracle, double a, double b,
                    const QuadratureConfig& cfg, const std::string& function_label) {
    if (oracle.max_order() < 4)
        throw InsufficientDerivativeOrder("replay needs derivatives up to order 4");

    const FunctionOracle scaled = rescale_to_unit(oracle, a, b);
    const double defect1 = simpson_defect(scaled, 1.0, cfg);
    const SupBound sup = resolve_sup_bound(scaled, 4, -1.0, 1.0);

    const auto pinned_value = [&scaled, &cfg, defect1](double t) {
        return simpson_defect(scaled, t, cfg) - std::pow(t, 5) * defect1;
    };
    const auto pinned_d1 = [&scaled, defect1](double t) {
        return defect_d1(scaled, t) - 5.0 * std::pow(t, 4) * defect1;
    };
    const auto pinned_d2 = [&scaled, defect1](double t) {
        return defect_d2(scaled, t) - 20.0 * std::pow(t, 3) * defect1;
    };

    ReplayReport report;
    report.function_label = function_label;
    report.a = a;
    report.b = b;
    report.sup_d4 = sup.value;
    report.sup_rigor = sup.rigor;

    const auto equal_check = [&report](std::string name, double lhs, double rhs,
                                       double tol) {
        const bool pass = std::abs(lhs - rhs) <= tol;
        report.checks.push_back(
            ReplayCheck{std::move(name), lhs, rhs, tol, false, pass});
    };

    // (1) The pinned defect vanishes where the construction pins it.
    equal_check("pinned(0) = 0", pinned_value(0.0), 0.0, 1e-8);
    equal_check("pinned(1) = 0", pinned_value(1.0), 0.0, 1e-8);
    equal_check("pinned'(0) = 0", pinned_d1(0.0), 0.0, 1e-8);
    equal_check("pinned''(0) = 0", pinned_d2(0.0), 0.0, 1e-8);

    // (2) Third divided difference over (0, 0, 0, 1), link by link. The
    // triple node takes exact confluent entries (p''(0)/2, p'(0)); the
    // mixed entries come from the recurrence on quadrature values.
    const FunctionOracle pinned_oracle(
        pinned_value, 3,
        [&](int k, double t) {
            if (k == 1) return pinned_d1(t);
            if (k == 2) return pinned_d2(t);
            return pinned_d3(scaled, t, defect1);
        });
    const NodeList chain_nodes{0.0, 0.0, 0.0, 1.0};
    const double dd3 = top_difference(build_table(pinned_oracle, chain_nodes));

    const double dd2_000 = pinned_d2(0.0) / 2.0;
    const double dd1_00 = pinned_d1(0.0);
    const double dd1_01 = pinned_value(1.0) - pinned_value(0.0);
    const double dd2_001 = dd1_01 - dd1_00;

    const double neg_dd2_gap = -(dd2_000 - dd2_001);
    const double half_chain = 0.5 * dd1_00 + dd1_01;
    equal_check("dd3(0,0,0,1) = -(dd2(0,0,0) - dd2(0,0,1))", dd3, neg_dd2_gap, 1e-6);
    equal_check("-(dd2(0,0,0) - dd2(0,0,1)) = (1/2) dd1(0,0) + dd1(0,1)",
                neg_dd2_gap, half_chain, 1e-6);
    equal_check("(1/2) dd1(0,0) + dd1(0,1) = 0", half_chain, 0.0, 1e-6);

    // (3) Simplex integral of p''' over (0, 0, 0, 1). The integrand only
    // depends on the last barycentric coordinate, so the integral reduces
    // to the 1-D marginal with weight (1-s)^2 / 2.
    const double third_integral = integrate_1d(
        [&](double s) {
            return pinned_d3(scaled, s, defect1) * (1.0 - s) * (1.0 - s) * 0.5;
        },
        0.0, 1.0, cfg);
    equal_check("simplex integral of pinned''' = 0", third_integral, 0.0, 1e-6);

    // (4) The Simpson constant: |90 defect(1)| <= sup |g''''|.
    {
        const double lhs = std::abs(90.0 * defect1);
        const double tol = 1e-8;
        const bool pass = lhs <= sup.value + tol;
        report.checks.push_back(ReplayCheck{"|90 defect(1)| <= sup|g''''|", lhs,
                                            sup.value, tol, true, pass});
    }

    report.overall = true;
    for (const ReplayCheck& c : report.checks) report.overall = report.overall && c.pass;
    return report;
}

} // namespace genocchi
