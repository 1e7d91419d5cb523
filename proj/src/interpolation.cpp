#include "genocchi/interpolation.hpp"

#include "genocchi/hermite_genocchi.hpp"

namespace genocchi {

namespace {

double factorial(std::size_t k) {
    double f = 1.0;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
    return f;
}

} // namespace

NewtonPolynomial newton_fit(const FunctionOracle& oracle, const NodeList& nodes) {
    DividedDifferenceTable table = build_table(oracle, nodes);
    return NewtonPolynomial{table.nodes(), table.first_column()};
}

double newton_eval(const NewtonPolynomial& p, double x) {
    const std::size_t n = p.coeffs.size();
    double acc = p.coeffs[n - 1];
    for (std::size_t k = n - 1; k-- > 0;)
        acc = acc * (x - p.nodes[k]) + p.coeffs[k];
    return acc;
}

double remainder(const FunctionOracle& oracle, const NodeList& nodes, double x,
                 const QuadratureConfig& cfg) {
    double product = 1.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) product *= x - nodes[k];
    if (product == 0.0) return 0.0; // x is a node; P reproduces f there

    std::vector<double> extended = nodes.values();
    extended.push_back(x);
    return product * hg_divided_difference(oracle, NodeList(std::move(extended)), cfg);
}

ErrorCertificate lagrange_bound(const NodeList& nodes, double x, double sup_m,
                                Rigor rigor) {
    if (sup_m < 0.0)
        throw std::invalid_argument("lagrange_bound: M must be >= 0");
    double product = 1.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) product *= x - nodes[k];
    const double bound = std::abs(product) * sup_m / factorial(nodes.size());
    return ErrorCertificate{bound, "lagrange_n!", sup_m, rigor};
}

} // namespace genocchi
