#ifndef ZK_SCALING_FIT_HPP
#define ZK_SCALING_FIT_HPP

#include <utility>
#include <vector>

namespace zk {

/** Ordinary-least-squares fit of (log2 scale, log2 value) samples. */
struct ScalingFitReport {
    std::vector<std::pair<double, double>> points;
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;
};

/// OLS on the given points; requires >= 4 of them.
ScalingFitReport fit_loglog(std::vector<std::pair<double, double>> points);

} // namespace zk

#endif
