#pragma once

#include <functional>
#include <string>

#include "genocchi/errors.hpp"

namespace genocchi {

/// Provenance of a derivative sup bound: proven, or estimated from samples.
enum class Rigor { rigorous, sampled };

inline const char* to_string(Rigor r) {
    return r == Rigor::rigorous ? "rigorous" : "sampled";
}

/// A bound M with |f^(k)(x)| <= M on some interval, plus where M came from.
struct SupBound {
    double value = 0.0;
    Rigor rigor = Rigor::sampled;
};

/// Evaluation procedure for a function and its derivatives up to a fixed
/// order, with an optional sup-bound procedure for |f^(k)| over an interval.
///
/// Evaluation is pure: instances are freely shareable across threads.
class FunctionOracle {
public:
    using ValueFn = std::function<double(double)>;
    using DerivativeFn = std::function<double(int, double)>;
    using SupBoundFn = std::function<SupBound(int, double, double)>;

    /// A value-only oracle (max_order 0).
    explicit FunctionOracle(ValueFn value)
        : value_(std::move(value)), max_order_(0) {}

    FunctionOracle(ValueFn value, int max_order, DerivativeFn derivative,
                   SupBoundFn sup_bound = {})
        : value_(std::move(value)),
          derivative_(std::move(derivative)),
          sup_bound_(std::move(sup_bound)),
          max_order_(max_order) {
        if (max_order_ < 0)
            throw std::invalid_argument("FunctionOracle: max_order must be >= 0");
        if (max_order_ > 0 && !derivative_)
            throw std::invalid_argument(
                "FunctionOracle: derivative procedure required when max_order > 0");
    }

    double value(double x) const { return value_(x); }

    /// k-th derivative at x; order 0 is the value itself.
    double derivative(int k, double x) const {
        if (k == 0) return value_(x);
        if (k < 0 || k > max_order_)
            throw InsufficientDerivativeOrder(
                "derivative order " + std::to_string(k) +
                " exceeds oracle max_order " + std::to_string(max_order_));
        return derivative_(k, x);
    }

    int max_order() const { return max_order_; }

    bool has_sup_bound() const { return static_cast<bool>(sup_bound_); }

    /// Bound on |f^(k)| over [lo, hi]; only valid if has_sup_bound().
    SupBound sup_bound(int k, double lo, double hi) const {
        return sup_bound_(k, lo, hi);
    }

private:
    ValueFn value_;
    DerivativeFn derivative_;
    SupBoundFn sup_bound_;
    int max_order_;
};

/// Sampled estimate of sup |f^(k)| over [lo, hi]: 1.1 x the max over a
/// 1024-point uniform grid. Always flagged Rigor::sampled.
SupBound sample_sup_bound(const FunctionOracle& f, int k, double lo, double hi);

/// The oracle's own sup bound when it has one, else the sampled estimate.
SupBound resolve_sup_bound(const FunctionOracle& f, int k, double lo, double hi);

} // namespace genocchi
