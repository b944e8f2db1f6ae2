#ifndef ZK_MULTIPLIERS_HPP
#define ZK_MULTIPLIERS_HPP

#include <cmath>
#include <vector>

#include "zk/field.hpp"
#include "zk/grid.hpp"

namespace zk {

/** Visit every Fourier mode with its frequency split (xi, |eta|^2).
 * fn(flat_index, xi, eta_sq); xi is the axis-0 frequency. */
template <class F>
void for_each_mode(const Grid& g, F&& fn) {
    const int d = g.dim();
    std::vector<std::vector<double>> freq(d);
    for (int ax = 0; ax < d; ++ax) {
        freq[ax].resize(g.points(ax));
        for (int i = 0; i < g.points(ax); ++i) freq[ax][i] = g.frequency(ax, i);
    }
    std::vector<int> idx(d, 0);
    const std::size_t n = g.size();
    for (std::size_t flat = 0; flat < n; ++flat) {
        const double xi = freq[0][idx[0]];
        double eta_sq = 0.0;
        for (int ax = 1; ax < d; ++ax) {
            const double w = freq[ax][idx[ax]];
            eta_sq += w * w;
        }
        fn(flat, xi, eta_sq);
        for (int ax = d - 1; ax >= 0; --ax) {
            if (++idx[ax] < g.points(ax)) break;
            idx[ax] = 0;
        }
    }
}

/// New field with coefficients multiplied pointwise by symbol(xi, eta_sq).
template <class Symbol>
SpectralField apply_multiplier(const SpectralField& f, Symbol&& symbol) {
    SpectralField out(f.grid(), f.tag());
    const CoeffArray& in = f.coeffs();
    CoeffArray& dst = out.coeffs();
    for_each_mode(f.grid(), [&](std::size_t i, double xi, double eta_sq) {
        dst[i] = in[i] * symbol(xi, eta_sq);
    });
    return out;
}

/// Bessel potential <grad>^s: coefficients scaled by (1 + |zeta|^2)^{s/2}.
SpectralField bessel_potential(const SpectralField& f, double s);

/// Sobolev H^s norm: Parseval-weighted l2 norm of bessel_potential(f, s).
double sobolev_norm(const SpectralField& f, double s);

/// |zeta| multiplier (full gradient magnitude).
SpectralField gradient_magnitude(const SpectralField& f, int order = 1);

/// sqrt(3 xi^2 + |eta|^2): the group-velocity weight of the smoothing estimate.
SpectralField smoothing_weight(const SpectralField& f);

} // namespace zk

#endif
