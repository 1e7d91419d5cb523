#include "genocchi/simplex_quadrature.hpp"

#include <vector>

namespace genocchi {

namespace {

// Reduces the simplex integral one dimension at a time. `point` holds a
// barycentric point of sigma_m (m = point.size() - 1); the last coordinate
// t_m splits as (t_m (1-u), t_m u) under a 1-D integral over u, with
// Jacobian t_m. The coordinate sum stays exactly 1 along the way. The
// buffer is mutated in place and restored, so a single allocation serves
// the whole recursion (evaluation is strictly sequential).
class SimplexReduction {
public:
    SimplexReduction(const SimplexIntegrand& g, const QuadratureConfig& cfg)
        : g_(g), cfg_(cfg) {
        point_.reserve(static_cast<std::size_t>(g.order) + 1);
    }

    double run() {
        point_.assign(1, 1.0);
        return level();
    }

private:
    double level() {
        if (point_.size() == static_cast<std::size_t>(g_.order) + 1)
            return g_.eval(point_);
        const double tail = point_.back();
        if (tail == 0.0) return 0.0; // Jacobian factor kills the level
        const double inner = integrate_1d(
            [this, tail](double u) {
                point_.back() = tail * (1.0 - u);
                point_.push_back(tail * u);
                const double v = level();
                point_.pop_back();
                point_.back() = tail;
                return v;
            },
            0.0, 1.0, cfg_);
        return tail * inner;
    }

    const SimplexIntegrand& g_;
    const QuadratureConfig& cfg_;
    std::vector<double> point_;
};

} // namespace

double integrate_simplex(const SimplexIntegrand& g, const QuadratureConfig& cfg) {
    cfg.validate();
    if (g.order < 0)
        throw std::invalid_argument("integrate_simplex: order must be >= 0");
    if (!g.eval)
        throw std::invalid_argument("integrate_simplex: integrand is empty");
    return SimplexReduction(g, cfg).run();
}

} // namespace genocchi
