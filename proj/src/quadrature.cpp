#include "genocchi/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "genocchi/summation.hpp"

namespace genocchi {

namespace {

double simpson_value(const FunctionOracle& f, double a, double b) {
    return (b - a) / 6.0 * (f.value(a) + 4.0 * f.value(0.5 * (a + b)) + f.value(b));
}

// M for the fourth-derivative certificate: explicit override first, then
// the oracle's own bound, then the sampled estimate; none obtainable when
// the oracle stops below order 4.
std::optional<SupBound> fourth_sup(const FunctionOracle& f, double a, double b,
                                   const std::optional<SupBound>& sup_override) {
    if (sup_override) return sup_override;
    if (f.has_sup_bound()) return f.sup_bound(4, a, b);
    if (f.max_order() >= 4) return sample_sup_bound(f, 4, a, b);
    return std::nullopt;
}

} // namespace

QuadResult simpson(const FunctionOracle& f, double a, double b,
                   std::optional<SupBound> sup_override) {
    if (a > b) throw std::invalid_argument("simpson: requires a <= b");
    QuadResult result;
    result.value = simpson_value(f, a, b);
    result.panels = 1;
    if (auto sup = fourth_sup(f, a, b, sup_override)) {
        const double width = b - a;
        result.certificate = ErrorCertificate{
            sup->value * std::pow(width, 5) / 2880.0, "simpson_2880",
            sup->value, sup->rigor};
    }
    return result;
}

QuadResult composite_simpson(const FunctionOracle& f, double a, double b, int m,
                             std::optional<SupBound> sup_override) {
    if (a > b) throw std::invalid_argument("composite_simpson: requires a <= b");
    if (m < 1) throw std::invalid_argument("composite_simpson: m must be >= 1");

    const double h = (b - a) / static_cast<double>(m);
    std::vector<double> panels(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const double left = a + h * static_cast<double>(i);
        const double right = (i == m - 1) ? b : a + h * static_cast<double>(i + 1);
        panels[static_cast<std::size_t>(i)] = simpson_value(f, left, right);
    }

    QuadResult result;
    result.value = pairwise_sum(panels);
    result.panels = m;
    if (auto sup = fourth_sup(f, a, b, sup_override)) {
        // Per-panel bound M h^5 / 2880 summed over the m panels.
        const double width = b - a;
        const double bound = sup->value * std::pow(width, 5) /
                             (2880.0 * std::pow(static_cast<double>(m), 4));
        result.certificate =
            ErrorCertificate{bound, "simpson_2880", sup->value, sup->rigor};
    }
    return result;
}

RombergTable romberg(const FunctionOracle& f, double a, double b, int levels) {
    if (a > b) throw std::invalid_argument("romberg: requires a <= b");
    if (levels < 1) throw std::invalid_argument("romberg: levels must be >= 1");
    if (levels > 30)
        throw std::invalid_argument("romberg: levels > 30 needs 2^30+ evaluations");

    std::vector<std::vector<double>> rows(static_cast<std::size_t>(levels));
    rows[0] = {0.5 * (b - a) * (f.value(a) + f.value(b))};

    for (int k = 1; k < levels; ++k) {
        const std::size_t new_points = std::size_t{1} << (k - 1);
        const double h = (b - a) / static_cast<double>(std::size_t{1} << k);
        std::vector<double> fresh(new_points);
        for (std::size_t i = 0; i < new_points; ++i)
            fresh[i] = f.value(a + h * static_cast<double>(2 * i + 1));

        auto& row = rows[static_cast<std::size_t>(k)];
        row.resize(static_cast<std::size_t>(k) + 1);
        row[0] = 0.5 * rows[static_cast<std::size_t>(k - 1)][0] + h * pairwise_sum(fresh);
        double power4 = 1.0;
        for (int j = 1; j <= k; ++j) {
            power4 *= 4.0;
            row[static_cast<std::size_t>(j)] =
                (power4 * row[static_cast<std::size_t>(j - 1)] -
                 rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)]) /
                (power4 - 1.0);
        }
    }
    return RombergTable(std::move(rows));
}

} // namespace genocchi
