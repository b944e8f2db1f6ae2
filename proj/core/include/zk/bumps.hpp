#ifndef ZK_BUMPS_HPP
#define ZK_BUMPS_HPP

namespace zk {

/** C-infinity cutoff machinery used by every frequency-localization in the lab.
 *
 * chi(x) = exp(-1/x) for x > 0, else 0.
 * ramp(x) = chi(x) / (chi(x) + chi(1-x)): 0 for x <= 0, 1 for x >= 1.
 *
 * annulus_profile(rho) = ramp((rho - 1/2)*2) * ramp((4 - rho)/2):
 *   supported on [1/2, 4], identically 1 on [1, 2].  This is the fixed bump
 *   behind the dyadic decomposition and the theta/psi counterexample bumps.
 *
 * kernel_profile(rho) = ramp((rho - 1/2)*4) * ramp((2 - rho)*2):
 *   supported on [1/2, 2], identically 1 on [3/4, 3/2]; the radial weight of
 *   the oscillatory kernel integrand.
 */
double chi(double x);
double ramp(double x);
double annulus_profile(double rho);
double kernel_profile(double rho);

/** Renormalized dyadic weight: annulus_profile(rho) / sum_k annulus_profile(2^-k rho),
 * so the dilates sum to exactly 1 for every rho > 0.  Returns 0 at rho = 0. */
double lp_weight(double rho);

/// sum_{k >= 0} lp_weight(2^-k rho); the complement 1 - this is the low block.
double lp_high_sum(double rho);

} // namespace zk

#endif
