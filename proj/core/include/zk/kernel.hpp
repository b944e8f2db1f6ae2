#ifndef ZK_KERNEL_HPP
#define ZK_KERNEL_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "zk/scaling_fit.hpp"

namespace zk {

/** One evaluation of the oscillatory dispersion kernel
 * I(t, z) = int psi(|xi|) exp(i t xi_1 |xi|^2 + i z.xi) dxi over R^d,
 * psi the radial kernel_profile (support 1/2 <= |xi| <= 2). */
struct KernelSample {
    double t = 0.0;
    std::vector<double> z;
    std::complex<double> value{0.0, 0.0};
};

/** Trapezoidal lattice rule with phase-resolution density: points per axis
 * scale with (base_density + points_per_radian * max phase rate), so the
 * phase varies by less than pi/4 per cell.  Declared accuracy 1e-6 absolute. */
struct QuadratureSpec {
    double points_per_radian = 1.5;
    double base_density = 48.0;
    std::size_t max_cells = 400000000;
};

/// d in {2, 3}; t != 0.  Throws QuadratureBudgetExceeded when the phase rule needs more cells than allowed.
KernelSample dispersion_kernel(double t, const std::vector<double>& z, int d,
                               const QuadratureSpec& spec = {});

/** Search lattice for sup_z |I(t, z)|: rays along the stationary-phase
 * direction (3 xi_1^2 + |eta|^2, 2 xi_1 |eta|) sampled at |xi| = 1, with a
 * geometric spread of radial multipliers, plus z = 0. */
struct SupSearchSpec {
    int n_angles = 5;                                      ///< alpha = idx * (pi/2) / (n-1)
    std::vector<double> radial_multipliers = {0.5, 0.70710678118654752, 1.0,
                                              1.4142135623730951, 2.0};
};

/// Maximizes |I(t, z)| over the search lattice; returns the best sample.
KernelSample kernel_sup_z(double t, int d, const QuadratureSpec& qspec = {},
                          const SupSearchSpec& sspec = {});

/** Least-squares decay fit of log2 sup_z |I(t, z)| against log2 t.
 * t_list must have >= 8 points spanning >= 1.5 decades.
 * phase_on = false replaces the oscillatory factor by 1 (control case). */
ScalingFitReport decay_fit(const std::vector<double>& t_list, int d,
                           const QuadratureSpec& qspec = {}, const SupSearchSpec& sspec = {},
                           bool phase_on = true);

/// Independent 1-d radial oracle for I(0, 0) = int psi(|xi|) dxi (Simpson rule).
double kernel_mass_oracle(int d, int n_points = 4097);

} // namespace zk

#endif
