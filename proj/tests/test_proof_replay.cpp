#include <doctest.h>

#include <cmath>
#include <numbers>

#include "genocchi/hermite_genocchi.hpp"
#include "genocchi/proof_replay.hpp"
#include "genocchi/quadrature.hpp"
#include "test_helpers.hpp"

using namespace genocchi;
using testutil::Poly;

namespace {
const QuadratureConfig kDefault{};

const ReplayCheck& find_check(const ReplayReport& report, const std::string& prefix) {
    for (const auto& c : report.checks)
        if (c.name.rfind(prefix, 0) == 0) return c;
    REQUIRE(false);
    static ReplayCheck dummy;
    return dummy;
}
} // namespace

TEST_CASE("rescale_to_unit examples") {
    SUBCASE("affine function on [0,2]") {
        const auto f = testutil::poly_oracle(Poly{{0, 1}}, 4); // f(x) = x
        const auto g = rescale_to_unit(f, 0.0, 2.0);
        CHECK(g.value(-1.0) == doctest::Approx(0.0));
        CHECK(g.value(0.0) == doctest::Approx(1.0));
        CHECK(g.value(1.0) == doctest::Approx(2.0));
        CHECK(g.derivative(1, 0.3) == doctest::Approx(1.0));
    }
    SUBCASE("identity rescale keeps x^4 and its sup") {
        const auto f = testutil::poly_oracle_exact_sup(Poly{{0, 0, 0, 0, 1}}, 4);
        const auto g = rescale_to_unit(f, -1.0, 1.0);
        CHECK(g.value(0.5) == doctest::Approx(0.0625));
        CHECK(g.sup_bound(4, -1.0, 1.0).value == doctest::Approx(24.0));
        CHECK(g.sup_bound(4, -1.0, 1.0).rigor == Rigor::rigorous);
    }
    SUBCASE("sin on [0, pi] scales fourth derivative by (pi/2)^4") {
        const double pi = std::numbers::pi;
        const auto g = rescale_to_unit(testutil::sin_oracle(4), 0.0, pi);
        CHECK(g.value(0.0) == doctest::Approx(1.0)); // sin(pi/2)
        CHECK(g.sup_bound(4, -1.0, 1.0).value ==
              doctest::Approx(std::pow(pi / 2.0, 4)));
    }
    SUBCASE("empty interval rejected") {
        const auto f = testutil::sin_oracle(4);
        CHECK_THROWS_AS(rescale_to_unit(f, 1.0, 1.0), EmptyInterval);
        CHECK_THROWS_AS(rescale_to_unit(f, 2.0, 1.0), EmptyInterval);
    }
}

TEST_CASE("simpson_defect examples") {
    SUBCASE("zero half-width") {
        const auto g = rescale_to_unit(testutil::exp_oracle(4), 0.0, 1.0);
        CHECK(simpson_defect(g, 0.0, kDefault) == 0.0);
    }
    SUBCASE("cubic: Simpson exact, defect(1) = 0") {
        const auto f = testutil::poly_oracle(Poly{{0, 0, 0, 1}}, 4);
        const auto g = rescale_to_unit(f, -1.0, 1.0);
        CHECK(std::abs(simpson_defect(g, 1.0, kDefault)) <= 1e-12);
    }
    SUBCASE("x^4: defect(1) = 2/5 - 2/3 = -4/15") {
        const auto f = testutil::poly_oracle(Poly{{0, 0, 0, 0, 1}}, 4);
        const auto g = rescale_to_unit(f, -1.0, 1.0);
        CHECK(std::abs(simpson_defect(g, 1.0, kDefault) + 4.0 / 15.0) <= 1e-10);
    }
}

TEST_CASE("pinned_defect examples") {
    const auto f = testutil::poly_oracle(Poly{{0, 0, 0, 0, 1}}, 4);
    const auto g = rescale_to_unit(f, -1.0, 1.0);

    SUBCASE("pinned at both ends and flat at zero") {
        const auto at0 = pinned_defect(g, 0.0, kDefault);
        CHECK(at0.value == 0.0);
        CHECK(at0.d1 == 0.0);
        CHECK(at0.d2 == 0.0);
        const auto at1 = pinned_defect(g, 1.0, kDefault);
        CHECK(std::abs(at1.value) <= 1e-12);
    }
    SUBCASE("third derivative at 1 cancels for x^4") {
        // -(1/3)(24 - (-24)) - 60*(-4/15) = -16 + 16
        const auto at1 = pinned_defect(g, 1.0, kDefault);
        CHECK(std::abs(at1.d3) <= 1e-8);
    }
    SUBCASE("half-width outside [0,1] rejected") {
        CHECK_THROWS_AS(pinned_defect(g, 1.5, kDefault), std::invalid_argument);
    }
}

TEST_CASE("replay: the x^4 witness attains the bound") {
    const auto f = testutil::poly_oracle_exact_sup(Poly{{0, 0, 0, 0, 1}}, 4);
    const auto report = replay(f, -1.0, 1.0, kDefault, "x^4");

    CHECK(report.overall);
    CHECK(std::abs(report.sup_d4 - 24.0) <= 1e-8);
    CHECK(report.sup_rigor == Rigor::rigorous);

    const auto& bound_check = find_check(report, "|90 defect(1)|");
    CHECK(std::abs(bound_check.lhs - 24.0) <= 1e-8); // |90 * (-4/15)|
    CHECK(bound_check.pass);
}

TEST_CASE("replay: cubic passes with zero defect") {
    const auto f = testutil::poly_oracle_exact_sup(Poly{{0, 0, 0, 1}}, 4);
    const auto report = replay(f, 0.0, 1.0, kDefault, "x^3");
    CHECK(report.overall);
    const auto& bound_check = find_check(report, "|90 defect(1)|");
    CHECK(std::abs(bound_check.lhs) <= 1e-10);
}

TEST_CASE("replay: sin on [0,1] stays within (1/2)^4") {
    const auto report = replay(testutil::sin_oracle(4), 0.0, 1.0, kDefault, "sin");
    CHECK(report.overall);
    CHECK(report.sup_d4 <= std::pow(0.5, 4) + 1e-12);
    const auto& bound_check = find_check(report, "|90 defect(1)|");
    CHECK(bound_check.lhs <= std::pow(0.5, 4) + 1e-8);
}

TEST_CASE("replay: a lying sup bound fails the inequality check only") {
    const FunctionOracle dishonest(
        [](double x) { return std::pow(x, 4); }, 4,
        [](int k, double x) {
            const double c[] = {1, 4, 12, 24, 24};
            return c[k] * std::pow(x, 4 - k);
        },
        [](int, double, double) { return SupBound{1.0, Rigor::rigorous}; });
    const auto report = replay(dishonest, -1.0, 1.0, kDefault, "rigged");
    CHECK_FALSE(report.overall);
    CHECK_FALSE(find_check(report, "|90 defect(1)|").pass);
    CHECK(find_check(report, "pinned(0)").pass);
}

TEST_CASE("replay requires four derivative orders") {
    CHECK_THROWS_AS(replay(testutil::sin_oracle(3), 0.0, 1.0, kDefault),
                    InsufficientDerivativeOrder);
}

TEST_CASE("invariant: defect(1) reproduces the Simpson error, scale (b-a)/2") {
    for (auto [a, b] : {std::pair{0.0, 1.0}, std::pair{-1.0, 2.0}}) {
        const auto f = testutil::exp_oracle(4);
        const double exact = std::exp(b) - std::exp(a);
        const double estimate = simpson(f, a, b).value;
        const double defect1 =
            simpson_defect(rescale_to_unit(f, a, b), 1.0, kDefault);
        CHECK(std::abs((exact - estimate) - 0.5 * (b - a) * defect1) <= 1e-8);
    }
}

TEST_CASE("invariant: sampled sup dominates a plain grid max") {
    const auto g = rescale_to_unit(testutil::exp_oracle(4), -1.0, 2.0);
    const SupBound sampled = sample_sup_bound(g, 4, -1.0, 1.0);
    double grid_max = 0.0;
    for (int i = 0; i < 1024; ++i) {
        const double t = -1.0 + 2.0 * i / 1023.0;
        grid_max = std::max(grid_max, std::abs(g.derivative(4, t)));
    }
    CHECK(sampled.value >= grid_max);
    CHECK(sampled.rigor == Rigor::sampled);
}

TEST_CASE("invariant: marginal route equals the full simplex reduction") {
    // The replay evaluates the third-derivative integral through the 1-D
    // marginal; check it against integrate_simplex on the same node list.
    const auto scaled = rescale_to_unit(testutil::sin_oracle(4), 0.0, 1.0);
    const double defect1 = simpson_defect(scaled, 1.0, kDefault);

    const auto third = [&](double t) {
        return -(t / 3.0) * (scaled.derivative(3, t) - scaled.derivative(3, -t)) -
               60.0 * t * t * defect1;
    };
    const QuadratureConfig cfg{1e-8, 40};
    const double marginal = integrate_1d(
        [&](double s) { return third(s) * (1.0 - s) * (1.0 - s) * 0.5; }, 0.0, 1.0,
        cfg);

    const SimplexIntegrand g{3, [&](std::span<const double> t) {
                                 return third(t[3]);
                             }};
    const double full = integrate_simplex(g, cfg);
    CHECK(std::abs(marginal - full) <= 1e-7);
}
