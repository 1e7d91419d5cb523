#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace genocchi {

/// Two doubles are confluent only when their bit patterns coincide. Nearly
/// equal but distinct nodes go through the difference quotient unchanged,
/// which is a conditioning hazard the caller owns.
inline bool bit_equal(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

/// Ordered sequence of abscissae; repetition (confluence) is permitted.
/// A list of length n+1 defines an order-n divided difference.
class NodeList {
public:
    explicit NodeList(std::vector<double> nodes);
    NodeList(std::initializer_list<double> nodes)
        : NodeList(std::vector<double>(nodes)) {}

    std::size_t size() const { return nodes_.size(); }
    std::size_t order() const { return nodes_.size() - 1; }
    double operator[](std::size_t i) const { return nodes_[i]; }
    const std::vector<double>& values() const { return nodes_; }

    /// True iff no two entries are bit-equal.
    bool all_distinct() const { return all_distinct_; }

    /// Copy with entries stably sorted ascending, so confluent nodes are
    /// adjacent (the standard Hermite table layout).
    NodeList sorted() const;

    double min() const;
    double max() const;

private:
    std::vector<double> nodes_;
    bool all_distinct_;
};

} // namespace genocchi
