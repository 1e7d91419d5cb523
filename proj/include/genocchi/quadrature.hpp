#pragma once

#include <optional>
#include <vector>

#include "genocchi/certificate.hpp"
#include "genocchi/oracle.hpp"

namespace genocchi {

/// Integral estimate with an optional certified error bound.
struct QuadResult {
    double value = 0.0;
    std::optional<ErrorCertificate> certificate;
    int panels = 1;
};

/// Richardson extrapolation table. entry(k, 0) is the trapezoid estimate
/// with 2^k subintervals; entry(k, j) = (4^j entry(k, j-1) -
/// entry(k-1, j-1)) / (4^j - 1). Column 1 coincides with composite Simpson
/// on 2^{k-1} panels; higher columns carry no certificate.
class RombergTable {
public:
    explicit RombergTable(std::vector<std::vector<double>> rows)
        : rows_(std::move(rows)) {}

    int levels() const { return static_cast<int>(rows_.size()); }
    double entry(int k, int j) const { return rows_[k][j]; }
    const std::vector<std::vector<double>>& rows() const { return rows_; }

    /// Highest-order extrapolant, entry(levels-1, levels-1).
    double best() const { return rows_.back().back(); }

private:
    std::vector<std::vector<double>> rows_;
};

/// Three-point Simpson estimate (b-a)/6 * (f(a) + 4 f((a+b)/2) + f(b)).
/// The certificate bound is M (b-a)^5 / 2880 with M a sup of |f''''|:
/// taken from sup_override when given, otherwise from the oracle (its own
/// sup_bound if present, else the sampled estimate). No certificate when
/// no M is obtainable.
QuadResult simpson(const FunctionOracle& f, double a, double b,
                   std::optional<SupBound> sup_override = std::nullopt);

/// Simpson summed over m equal panels (pairwise reduction); per-panel
/// bounds sum to M (b-a)^5 / (2880 m^4).
QuadResult composite_simpson(const FunctionOracle& f, double a, double b, int m,
                             std::optional<SupBound> sup_override = std::nullopt);

/// Full Romberg table with the given number of levels (>= 1).
RombergTable romberg(const FunctionOracle& f, double a, double b, int levels);

} // namespace genocchi
