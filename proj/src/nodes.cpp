#include "genocchi/nodes.hpp"

#include <algorithm>
#include <stdexcept>

namespace genocchi {

namespace {

bool compute_all_distinct(const std::vector<double>& nodes) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (bit_equal(nodes[i], nodes[j])) return false;
    return true;
}

} // namespace

NodeList::NodeList(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty())
        throw std::invalid_argument("NodeList: at least one node required");
    all_distinct_ = compute_all_distinct(nodes_);
}

NodeList NodeList::sorted() const {
    std::vector<double> copy = nodes_;
    std::stable_sort(copy.begin(), copy.end());
    return NodeList(std::move(copy));
}

double NodeList::min() const {
    return *std::min_element(nodes_.begin(), nodes_.end());
}

double NodeList::max() const {
    return *std::max_element(nodes_.begin(), nodes_.end());
}

} // namespace genocchi
