#include "genocchi/divided_differences.hpp"

#include <stdexcept>
#include <string>

namespace genocchi {

namespace {

double factorial(std::size_t k) {
    double f = 1.0;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
    return f;
}

} // namespace

std::vector<double> DividedDifferenceTable::first_column() const {
    std::vector<double> col;
    col.reserve(rows_.size());
    for (const auto& row : rows_) col.push_back(row.front());
    return col;
}

DividedDifferenceTable build_table(const FunctionOracle& oracle, const NodeList& nodes) {
    const NodeList sorted = nodes.sorted();
    const std::size_t n = sorted.order();

    std::vector<std::vector<double>> rows(n + 1);
    rows[0].resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) rows[0][i] = oracle.value(sorted[i]);

    for (std::size_t k = 1; k <= n; ++k) {
        rows[k].resize(n + 1 - k);
        for (std::size_t i = 0; i + k <= n; ++i) {
            // Sorted ascending, so equal endpoints mean the whole span is
            // one confluent node.
            if (bit_equal(sorted[i], sorted[i + k])) {
                if (static_cast<int>(k) > oracle.max_order())
                    throw InsufficientDerivativeOrder(
                        "node repeated " + std::to_string(k + 1) +
                        " times needs derivative order " + std::to_string(k) +
                        ", oracle supplies " + std::to_string(oracle.max_order()));
                rows[k][i] = oracle.derivative(static_cast<int>(k), sorted[i]) /
                             factorial(k);
            } else {
                rows[k][i] = (rows[k - 1][i + 1] - rows[k - 1][i]) /
                             (sorted[i + k] - sorted[i]);
            }
        }
    }
    return DividedDifferenceTable(sorted, std::move(rows));
}

double ampere_explicit(std::span<const double> values, const NodeList& nodes) {
    if (values.size() != nodes.size())
        throw std::invalid_argument(
            "ampere_explicit: one function value per node required");
    if (!nodes.all_distinct())
        throw ConfluentNodes("ampere_explicit: nodes must be pairwise distinct");

    double sum = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        double denom = 1.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (i == j) continue;
            denom *= nodes[j] - nodes[i];
        }
        sum += values[j] / denom;
    }
    return sum;
}

double top_difference(const DividedDifferenceTable& table) { return table.top(); }

} // namespace genocchi
