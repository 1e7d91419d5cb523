#pragma once

#include <vector>

#include "genocchi/certificate.hpp"
#include "genocchi/divided_differences.hpp"
#include "genocchi/simplex_quadrature.hpp"

namespace genocchi {

/// Interpolation polynomial in Newton form: centers x_0..x_{n-1} and
/// coefficients coeffs[k] = f_k(x_0,...,x_k). Confluent centers make it the
/// Hermite/Taylor interpolant.
struct NewtonPolynomial {
    NodeList nodes;            // centers, ascending
    std::vector<double> coeffs; // one per node
};

/// Fit by taking the first column of the divided-difference table.
/// Confluent nodes need derivatives exactly as build_table does.
NewtonPolynomial newton_fit(const FunctionOracle& oracle, const NodeList& nodes);

/// Nested (Horner-style) evaluation from the highest coefficient down.
double newton_eval(const NewtonPolynomial& p, double x);

/// Exact interpolation remainder
///   f(x) - P(x) = (x - x_0)...(x - x_{n-1}) f_n(x_0,...,x_{n-1}, x)
/// with the divided difference evaluated by the Hermite-Genocchi integral.
/// Needs oracle.max_order() >= |nodes| unless x coincides with a node
/// (then the product, and the remainder, is exactly 0).
double remainder(const FunctionOracle& oracle, const NodeList& nodes, double x,
                 const QuadratureConfig& cfg);

/// Lagrange certificate |f(x) - P(x)| <= |prod (x - x_k)| * M / n! for any M
/// dominating |f^(n)| on an interval containing x and the nodes.
ErrorCertificate lagrange_bound(const NodeList& nodes, double x, double sup_m,
                                Rigor rigor);

} // namespace genocchi
