#include "zk/bumps.hpp"

#include <cmath>

namespace zk {

double chi(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

double ramp(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double a = chi(x);
    return a / (a + chi(1.0 - x));
}

double annulus_profile(double rho) {
    return ramp((rho - 0.5) * 2.0) * ramp((4.0 - rho) / 2.0);
}

double kernel_profile(double rho) {
    return ramp((rho - 0.5) * 4.0) * ramp((2.0 - rho) * 2.0);
}

double lp_weight(double rho) {
    if (!(rho > 0.0)) return 0.0;
    const double v = annulus_profile(rho);
    if (v == 0.0) return 0.0;
    // Dilates overlapping rho: 2^-k rho in (1/2, 4) <=> k in (log2(rho)-2, log2(rho)+1).
    const int k0 = static_cast<int>(std::floor(std::log2(rho))) - 2;
    double s = 0.0;
    for (int k = k0; k <= k0 + 4; ++k) s += annulus_profile(std::ldexp(rho, -k));
    return v / s;
}

double lp_high_sum(double rho) {
    if (!(rho > 0.0)) return 0.0;
    double s = 0.0;
    const int kmax = static_cast<int>(std::ceil(std::log2(rho))) + 2;
    for (int k = 0; k <= kmax; ++k) s += lp_weight(std::ldexp(rho, -k));
    return s < 1.0 ? s : 1.0;
}

} // namespace zk
