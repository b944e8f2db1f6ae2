#include "zk/littlewood_paley.hpp"

#include <cmath>
#include <string>

#include "zk/bumps.hpp"
#include "zk/errors.hpp"
#include "zk/multipliers.hpp"

namespace zk {

std::vector<double> lp_band_weights(const Grid& g, int k) {
    if (k < -1) throw InfeasibleOnGrid("lp_band_weights: band index must be >= -1");
    std::vector<double> w(g.size());
    if (k == -1) {
        for_each_mode(g, [&](std::size_t i, double xi, double eta_sq) {
            w[i] = 1.0 - lp_high_sum(std::sqrt(xi * xi + eta_sq));
        });
    } else {
        const double scale = std::ldexp(1.0, -k);
        for_each_mode(g, [&](std::size_t i, double xi, double eta_sq) {
            w[i] = lp_weight(scale * std::sqrt(xi * xi + eta_sq));
        });
    }
    return w;
}

std::vector<double> lp_ball_weights(const Grid& g, int j) {
    if (j < 0) throw InfeasibleOnGrid("lp_ball_weights: ball index must be >= 0");
    std::vector<double> w(g.size());
    const double scale = std::ldexp(1.0, -(j + 1));
    for_each_mode(g, [&](std::size_t i, double xi, double eta_sq) {
        w[i] = 1.0 - lp_high_sum(scale * std::sqrt(xi * xi + eta_sq));
    });
    return w;
}

SpectralField apply_weights(const SpectralField& f, const std::vector<double>& w) {
    if (w.size() != f.size()) throw DimensionMismatch("apply_weights: size mismatch");
    SpectralField out(f.grid(), f.tag());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = f[i] * w[i];
    return out;
}

SpectralField lp_project(const SpectralField& f, LpMode mode, int index) {
    if (mode == LpMode::annulus) {
        if (index < -1) throw InfeasibleOnGrid("lp_project: annulus index >= -1 required");
        return apply_weights(f, lp_band_weights(f.grid(), index));
    }
    if (index < 0) throw InfeasibleOnGrid("lp_project: ball index >= 0 required");
    SpectralField acc = apply_weights(f, lp_band_weights(f.grid(), -1));
    for (int l = 0; l <= index; ++l) {
        acc += apply_weights(f, lp_band_weights(f.grid(), l));
    }
    return acc;
}

int max_band(const Grid& g) {
    double corner_sq = 0.0;
    for (int ax = 0; ax < g.dim(); ++ax) {
        const double m = g.max_frequency(ax);
        corner_sq += m * m;
    }
    const double corner = std::sqrt(corner_sq);
    return static_cast<int>(std::floor(std::log2(corner))) + 1;
}

std::size_t band_site_count(const Grid& g, int k, double min_weight) {
    const std::vector<double> w = lp_band_weights(g, k);
    std::size_t n = 0;
    for (double v : w) {
        if (v >= min_weight) ++n;
    }
    return n;
}

} // namespace zk
