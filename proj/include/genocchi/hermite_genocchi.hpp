#pragma once

#include "genocchi/nodes.hpp"
#include "genocchi/oracle.hpp"
#include "genocchi/simplex_quadrature.hpp"

namespace genocchi {

/// Order-n divided difference via the Hermite-Genocchi representation:
/// the integral of f^(n)(t_0 x_0 + ... + t_n x_n) over the standard simplex,
/// n = |nodes| - 1. Valid for any node multiset, confluent or not.
///
/// Requires oracle.max_order() >= n. Propagates MaxDepthExceeded.
double hg_divided_difference(const FunctionOracle& oracle, const NodeList& nodes,
                             const QuadratureConfig& cfg);

/// f^(n)(x) recovered as n! times the order-n divided difference on the
/// n+1-fold repeated node x. Cross-checks the oracle's own derivative.
double derivative_from_dd(const FunctionOracle& oracle, double x, int n,
                          const QuadratureConfig& cfg);

} // namespace genocchi
