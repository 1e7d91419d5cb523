#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "genocchi/interpolation.hpp"
#include "genocchi/oracle.hpp"

namespace testutil {

// Dense polynomial with ascending coefficients; the independent oracle for
// most divided-difference and quadrature tests.
struct Poly {
    std::vector<double> c; // c[0] + c[1] x + ...

    double operator()(double x) const {
        double acc = 0.0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }

    Poly derivative() const {
        Poly d;
        for (std::size_t i = 1; i < c.size(); ++i)
            d.c.push_back(c[i] * static_cast<double>(i));
        if (d.c.empty()) d.c.push_back(0.0);
        return d;
    }

    Poly derivative(int k) const {
        Poly d = *this;
        for (int i = 0; i < k; ++i) d = d.derivative();
        return d;
    }

    // Antiderivative with zero constant term.
    Poly antiderivative() const {
        Poly g;
        g.c.push_back(0.0);
        for (std::size_t i = 0; i < c.size(); ++i)
            g.c.push_back(c[i] / static_cast<double>(i + 1));
        return g;
    }

    double integral(double a, double b) const {
        const Poly g = antiderivative();
        return g(b) - g(a);
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }
};

inline genocchi::FunctionOracle poly_oracle(Poly p, int max_order) {
    std::vector<Poly> ds{p};
    for (int k = 1; k <= max_order; ++k) ds.push_back(ds.back().derivative());
    return genocchi::FunctionOracle(
        [p](double x) { return p(x); }, max_order,
        [ds](int k, double x) { return ds[static_cast<std::size_t>(k)](x); });
}

// Polynomial oracle whose sup bound is exact: |p^(k)| over [lo, hi] via a
// fine scan of the derivative (flagged rigorous; the scan is exact at the
// tolerances the tests use only when the derivative is monotone or
// constant, which is how the tests employ it).
inline genocchi::FunctionOracle poly_oracle_exact_sup(Poly p, int max_order) {
    std::vector<Poly> ds{p};
    for (int k = 1; k <= max_order; ++k) ds.push_back(ds.back().derivative());
    return genocchi::FunctionOracle(
        [p](double x) { return p(x); }, max_order,
        [ds](int k, double x) { return ds[static_cast<std::size_t>(k)](x); },
        [ds](int k, double lo, double hi) {
            const Poly& d = ds[static_cast<std::size_t>(k)];
            // Degree <= 1 after the orders used in tests: endpoint max is exact.
            const double m = std::max(std::abs(d(lo)), std::abs(d(hi)));
            return genocchi::SupBound{m, genocchi::Rigor::rigorous};
        });
}

inline genocchi::FunctionOracle sin_oracle(int max_order) {
    return genocchi::FunctionOracle(
        [](double x) { return std::sin(x); }, max_order,
        [](int k, double x) {
            switch (k % 4) {
                case 0: return std::sin(x);
                case 1: return std::cos(x);
                case 2: return -std::sin(x);
                default: return -std::cos(x);
            }
        },
        [](int, double, double) {
            return genocchi::SupBound{1.0, genocchi::Rigor::rigorous};
        });
}

inline genocchi::FunctionOracle exp_oracle(int max_order) {
    return genocchi::FunctionOracle(
        [](double x) { return std::exp(x); }, max_order,
        [](int, double x) { return std::exp(x); },
        [](int, double lo, double hi) {
            return genocchi::SupBound{std::exp(std::max(lo, hi)),
                                      genocchi::Rigor::rigorous};
        });
}

// Newton-form value and first two derivatives at x by nested evaluation;
// an independent route for checking Hermite reproduction of derivatives.
struct NewtonJet {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

inline NewtonJet newton_eval_jet(const genocchi::NewtonPolynomial& p, double x) {
    const std::size_t n = p.coeffs.size();
    NewtonJet jet;
    jet.value = p.coeffs[n - 1];
    for (std::size_t k = n - 1; k-- > 0;) {
        const double w = x - p.nodes[k];
        jet.d2 = jet.d2 * w + 2.0 * jet.d1;
        jet.d1 = jet.d1 * w + jet.value;
        jet.value = jet.value * w + p.coeffs[k];
    }
    return jet;
}

inline double newton_eval_derivative(const genocchi::NewtonPolynomial& p, double x) {
    return newton_eval_jet(p, x).d1;
}

inline double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

inline std::mt19937 seeded_rng(unsigned seed) { return std::mt19937(seed); }

} // namespace testutil
