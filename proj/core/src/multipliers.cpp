#include "zk/multipliers.hpp"

namespace zk {

SpectralField bessel_potential(const SpectralField& f, double s) {
    if (s == 0.0) return f;
    const double half_s = 0.5 * s;
    return apply_multiplier(f, [half_s](double xi, double eta_sq) {
        return std::pow(1.0 + xi * xi + eta_sq, half_s);
    });
}

double sobolev_norm(const SpectralField& f, double s) {
    double acc = 0.0;
    const CoeffArray& c = f.coeffs();
    for_each_mode(f.grid(), [&](std::size_t i, double xi, double eta_sq) {
        acc += std::pow(1.0 + xi * xi + eta_sq, s) * std::norm(c[i]);
    });
    return std::sqrt(acc * f.grid().freq_cell_volume());
}

SpectralField gradient_magnitude(const SpectralField& f, int order) {
    return apply_multiplier(f, [order](double xi, double eta_sq) {
        return std::pow(std::sqrt(xi * xi + eta_sq), order);
    });
}

SpectralField smoothing_weight(const SpectralField& f) {
    return apply_multiplier(f, [](double xi, double eta_sq) {
        return std::sqrt(3.0 * xi * xi + eta_sq);
    });
}

} // namespace zk
