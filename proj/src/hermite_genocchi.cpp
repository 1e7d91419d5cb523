#include "genocchi/hermite_genocchi.hpp"

#include <string>
#include <vector>

#include "genocchi/summation.hpp"

namespace genocchi {

double hg_divided_difference(const FunctionOracle& oracle, const NodeList& nodes,
                             const QuadratureConfig& cfg) {
    const int n = static_cast<int>(nodes.order());
    if (oracle.max_order() < n)
        throw InsufficientDerivativeOrder(
            "order-" + std::to_string(n) + " divided difference needs f^(" +
            std::to_string(n) + "), oracle supplies order " +
            std::to_string(oracle.max_order()));

    const std::vector<double>& xs = nodes.values();
    SimplexIntegrand g{
        n,
        [&oracle, &xs, n](std::span<const double> t) {
            // Compensated affine point: wide node spreads cancel badly in a
            // plain dot product.
            const double point = compensated_dot(t, xs);
            return oracle.derivative(n, point);
        },
    };
    return integrate_simplex(g, cfg);
}

double derivative_from_dd(const FunctionOracle& oracle, double x, int n,
                          const QuadratureConfig& cfg) {
    if (n < 0)
        throw std::invalid_argument("derivative_from_dd: order must be >= 0");
    const NodeList repeated(std::vector<double>(static_cast<std::size_t>(n) + 1, x));
    double factorial = 1.0;
    for (int i = 2; i <= n; ++i) factorial *= static_cast<double>(i);
    return factorial * hg_divided_difference(oracle, repeated, cfg);
}

} // namespace genocchi
