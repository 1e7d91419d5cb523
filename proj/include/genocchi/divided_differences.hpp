#pragma once

#include <span>
#include <vector>

#include "genocchi/nodes.hpp"
#include "genocchi/oracle.hpp"

namespace genocchi {

/// Triangular table of divided differences over node prefixes:
/// entry(k, i) = f_k(x_i, ..., x_{i+k}) with the nodes sorted ascending.
///
/// Row 0 holds function values. For a fully confluent span the entry is
/// f^(k)(x_i)/k!; otherwise
///   entry(k, i) * (x_{i+k} - x_i) = entry(k-1, i+1) - entry(k-1, i).
class DividedDifferenceTable {
public:
    DividedDifferenceTable(NodeList sorted_nodes,
                           std::vector<std::vector<double>> rows)
        : nodes_(std::move(sorted_nodes)), rows_(std::move(rows)) {}

    const NodeList& nodes() const { return nodes_; }
    std::size_t order() const { return nodes_.order(); }

    double entry(std::size_t k, std::size_t i) const { return rows_[k][i]; }
    const std::vector<std::vector<double>>& rows() const { return rows_; }

    /// Column i = 0 for k = 0..n: the Newton coefficients over the prefix
    /// node sequence.
    std::vector<double> first_column() const;

    /// The order-n difference over all nodes, entry(n, 0).
    double top() const { return rows_.back().front(); }

private:
    NodeList nodes_;
    std::vector<std::vector<double>> rows_;
};

/// Fill the full triangular table for the given nodes. Nodes are stably
/// sorted ascending first so bit-equal nodes form contiguous spans; a span
/// of k+1 equal nodes takes the confluent value f^(k)(x)/k! and everything
/// else follows the difference-quotient recurrence.
///
/// Throws InsufficientDerivativeOrder if a confluent span needs a
/// derivative order beyond oracle.max_order().
DividedDifferenceTable build_table(const FunctionOracle& oracle, const NodeList& nodes);

/// Symmetric explicit formula sum_j f(x_j) / prod_{i != j} (x_j - x_i),
/// valid for pairwise distinct nodes only. Independent of the recurrence,
/// so it serves as an oracle for build_table.
///
/// Throws ConfluentNodes when two nodes are bit-equal.
double ampere_explicit(std::span<const double> values, const NodeList& nodes);

/// The order-n divided difference over all nodes of the table.
double top_difference(const DividedDifferenceTable& table);

} // namespace genocchi
