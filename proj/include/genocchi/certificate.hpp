#pragma once

#include <string>

#include "genocchi/oracle.hpp"

namespace genocchi {

/// Machine-checkable error bound: the bound value, the constant/formula it
/// came from, the derivative sup M that was used, and whether M is proven
/// or merely sampled.
struct ErrorCertificate {
    double bound = 0.0;
    std::string constant_name; // e.g. "lagrange_n!" or "simpson_2880"
    double sup_m = 0.0;
    Rigor rigor = Rigor::sampled;
};

} // namespace genocchi
