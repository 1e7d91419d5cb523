#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "genocchi/interpolation.hpp"
#include "test_helpers.hpp"

using namespace genocchi;
using testutil::Poly;

namespace {
const QuadratureConfig kDefault{};
}

TEST_CASE("newton_fit examples") {
    SUBCASE("x^3 over [0,1,2]") {
        const auto p = newton_fit(testutil::poly_oracle(Poly{{0, 0, 0, 1}}, 0),
                                  NodeList{0.0, 1.0, 2.0});
        REQUIRE(p.coeffs.size() == 3);
        CHECK(p.coeffs[0] == doctest::Approx(0.0));
        CHECK(p.coeffs[1] == doctest::Approx(1.0));
        CHECK(p.coeffs[2] == doctest::Approx(3.0));
    }
    SUBCASE("constants collapse to [c, 0, ..., 0]") {
        const FunctionOracle c([](double) { return -2.5; });
        const auto p = newton_fit(c, NodeList{0.0, 1.0, 4.0, 9.0});
        CHECK(p.coeffs[0] == doctest::Approx(-2.5));
        for (std::size_t k = 1; k < p.coeffs.size(); ++k)
            CHECK(p.coeffs[k] == doctest::Approx(0.0));
    }
    SUBCASE("fully confluent list is the Taylor expansion") {
        const auto p = newton_fit(testutil::poly_oracle(Poly{{0, 0, 1}}, 2),
                                  NodeList{1.0, 1.0, 1.0});
        CHECK(p.coeffs[0] == doctest::Approx(1.0));
        CHECK(p.coeffs[1] == doctest::Approx(2.0));
        CHECK(p.coeffs[2] == doctest::Approx(1.0));
    }
}

TEST_CASE("newton_eval examples") {
    SUBCASE("nested form at x=3") {
        const NewtonPolynomial p{NodeList{0.0, 1.0, 2.0}, {0.0, 1.0, 3.0}};
        CHECK(newton_eval(p, 3.0) == doctest::Approx(21.0));
    }
    SUBCASE("value at the first node is the first coefficient") {
        const NewtonPolynomial p{NodeList{0.5, 1.5, 2.5}, {4.25, -1.0, 0.75}};
        CHECK(newton_eval(p, 0.5) == doctest::Approx(4.25));
    }
    SUBCASE("Taylor form is exact") {
        const NewtonPolynomial p{NodeList{1.0, 1.0, 1.0}, {1.0, 2.0, 1.0}};
        CHECK(newton_eval(p, 2.0) == doctest::Approx(4.0));
    }
}

TEST_CASE("remainder examples") {
    const auto x3 = testutil::poly_oracle(Poly{{0, 0, 0, 1}}, 3);
    const NodeList nodes{0.0, 1.0, 2.0};

    CHECK(remainder(x3, nodes, 3.0, kDefault) == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(remainder(x3, nodes, 1.0, kDefault) == 0.0);
    CHECK(remainder(x3, nodes, 1.5, kDefault) ==
          doctest::Approx(-0.375).epsilon(1e-9));
}

TEST_CASE("lagrange_bound examples") {
    const double pi = std::numbers::pi;
    const NodeList nodes{0.0, pi / 2.0, pi};

    SUBCASE("closed form pi^3/128 at pi/4 with M=1") {
        const auto cert = lagrange_bound(nodes, pi / 4.0, 1.0, Rigor::rigorous);
        CHECK(std::abs(cert.bound - pi * pi * pi / 128.0) <= 1e-15);
        CHECK(cert.constant_name == "lagrange_n!");
        CHECK(cert.rigor == Rigor::rigorous);
    }
    SUBCASE("M = 0 gives a zero bound") {
        CHECK(lagrange_bound(nodes, 1.0, 0.0, Rigor::rigorous).bound == 0.0);
    }
    SUBCASE("bound vanishes at a node") {
        CHECK(lagrange_bound(nodes, pi / 2.0, 1.0, Rigor::sampled).bound == 0.0);
    }
    SUBCASE("negative M rejected") {
        CHECK_THROWS_AS(lagrange_bound(nodes, 1.0, -1.0, Rigor::sampled),
                        std::invalid_argument);
    }
}

TEST_CASE("invariant: interpolation at distinct nodes") {
    const auto f = testutil::sin_oracle(0);
    const NodeList nodes{-1.0, -0.2, 0.3, 0.9, 2.0};
    const auto p = newton_fit(f, nodes);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double fx = std::sin(nodes[i]);
        CHECK(std::abs(newton_eval(p, nodes[i]) - fx) <= 1e-12 * (1.0 + std::abs(fx)));
    }
}

TEST_CASE("invariant: duplicated node reproduces the derivative") {
    // x duplicated twice: P'(x) must match f'(x) there.
    const Poly cubic{{0, 0, 0, 1}};
    const auto f = testutil::poly_oracle(cubic, 2);
    const auto p = newton_fit(f, NodeList{1.0, 1.0, 2.0});
    CHECK(testutil::newton_eval_derivative(p, 1.0) == doctest::Approx(3.0));

    // Triple node: both P' and P'' pinned.
    const auto q = newton_fit(f, NodeList{0.5, 0.5, 0.5, 2.0});
    const auto jet = testutil::newton_eval_jet(q, 0.5);
    CHECK(jet.d1 == doctest::Approx(cubic.derivative()(0.5)));
    CHECK(jet.d2 == doctest::Approx(cubic.derivative(2)(0.5)));
}

TEST_CASE("invariant: remainder identity for smooth f") {
    const auto f = testutil::exp_oracle(4);
    const NodeList nodes{0.0, 0.7, 1.3, 2.0};
    const auto p = newton_fit(f, nodes);

    auto rng = testutil::seeded_rng(17);
    std::uniform_real_distribution<double> xs(0.0, 2.0);
    for (int round = 0; round < 12; ++round) {
        const double x = xs(rng);
        const double direct = std::exp(x) - newton_eval(p, x);
        const double via_identity = remainder(f, nodes, x, kDefault);
        CHECK(std::abs(direct - via_identity) <= 1e-7);
    }
}

TEST_CASE("invariant: certified containment for sin with M = 1") {
    const auto f = testutil::sin_oracle(0);
    const double pi = std::numbers::pi;
    const NodeList nodes{0.0, pi / 2.0, pi};
    const auto p = newton_fit(f, nodes);

    auto rng = testutil::seeded_rng(5);
    std::uniform_real_distribution<double> xs(0.0, pi);
    for (int round = 0; round < 100; ++round) {
        const double x = xs(rng);
        const double error = std::abs(std::sin(x) - newton_eval(p, x));
        CHECK(error <= lagrange_bound(nodes, x, 1.0, Rigor::rigorous).bound + 1e-10);
    }
}

TEST_CASE("invariant: the polynomial is independent of node order") {
    const auto f = testutil::sin_oracle(0);
    const std::vector<double> base{-0.5, 0.25, 1.0, 1.75};
    const auto reference = newton_fit(f, NodeList(base));

    std::vector<double> shuffled{1.0, -0.5, 1.75, 0.25};
    const auto other = newton_fit(f, NodeList(shuffled));
    for (double x : {-0.4, 0.1, 0.8, 1.6, 2.3}) {
        const double a = newton_eval(reference, x);
        const double b = newton_eval(other, x);
        CHECK(std::abs(a - b) <= 1e-9 * (1.0 + std::abs(a)));
    }
}
