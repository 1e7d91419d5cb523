#include "genocchi/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace genocchi {

SupBound sample_sup_bound(const FunctionOracle& f, int k, double lo, double hi) {
    constexpr int kGridPoints = 1024;
    double max_abs = 0.0;
    for (int i = 0; i < kGridPoints; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) /
                                  static_cast<double>(kGridPoints - 1);
        max_abs = std::max(max_abs, std::abs(f.derivative(k, x)));
    }
    return SupBound{1.1 * max_abs, Rigor::sampled};
}

SupBound resolve_sup_bound(const FunctionOracle& f, int k, double lo, double hi) {
    if (f.has_sup_bound()) return f.sup_bound(k, lo, hi);
    return sample_sup_bound(f, k, lo, hi);
}

} // namespace genocchi
