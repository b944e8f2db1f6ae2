#include "zk/scaling_fit.hpp"

#include <algorithm>
#include <cmath>

#include "zk/errors.hpp"

namespace zk {

ScalingFitReport fit_loglog(std::vector<std::pair<double, double>> points) {
    if (points.size() < 4) throw Error("fit_loglog: need at least 4 points");
    // Sort keys so parallel producers cannot perturb the accumulation order.
    std::sort(points.begin(), points.end());
    const double n = static_cast<double>(points.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : points) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    ScalingFitReport rep;
    rep.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    rep.intercept = (sy - rep.slope * sx) / n;
    for (const auto& [x, y] : points) {
        rep.max_residual = std::max(rep.max_residual,
                                    std::abs(y - (rep.intercept + rep.slope * x)));
    }
    rep.points = std::move(points);
    return rep;
}

} // namespace zk
