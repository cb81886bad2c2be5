#pragma once

#include <stdexcept>

namespace simwave {

/// Power nonlinearity chi^p with its derived constant
/// c0 = 2(p+1)/(p-1)^2 from the homogeneous blowup solution.
struct NonlinearityConfig {
    int p = 3;
    double c0 = 2.0;

    double pc0() const { return static_cast<double>(p) * c0; }
};

inline NonlinearityConfig make_config(int p) {
    if (p <= 1 || p % 2 == 0)
        throw std::invalid_argument("make_config: p must be an odd integer > 1");
    NonlinearityConfig cfg;
    cfg.p = p;
    const double pm1 = static_cast<double>(p - 1);
    cfg.c0 = 2.0 * static_cast<double>(p + 1) / (pm1 * pm1);
    return cfg;
}

/// The symmetry-induced eigenvalue lambda0 = 1 + 2/(p-1).
inline double gauge_eigenvalue(const NonlinearityConfig& cfg) {
    return 1.0 + 2.0 / static_cast<double>(cfg.p - 1);
}

} // namespace simwave
