#pragma once

#include <cmath>
#include <span>

namespace genocchi {

/// Pairwise (tree) reduction. Deterministic for a fixed input order and
/// less rounding-prone than a running sum.
inline double pairwise_sum(std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n == 0) return 0.0;
    if (n == 1) return xs[0];
    if (n == 2) return xs[0] + xs[1];
    const std::size_t half = n / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

/// Neumaier-compensated dot product sum(w[i] * x[i]). Used for affine
/// combinations of widely spread nodes where plain summation cancels.
inline double compensated_dot(std::span<const double> w, std::span<const double> x) {
    double sum = 0.0;
    double comp = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double term = w[i] * x[i];
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
    }
    return sum + comp;
}

} // namespace genocchi
