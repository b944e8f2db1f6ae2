#ifndef ZK_LITTLEWOOD_PALEY_HPP
#define ZK_LITTLEWOOD_PALEY_HPP

#include <cstddef>
#include <vector>

#include "zk/field.hpp"
#include "zk/grid.hpp"

namespace zk {

enum class LpMode { annulus, ball };

/** Dyadic frequency projection.
 *
 * annulus: Delta_k for k >= 0 multiplies by the renormalized bump at scale
 * 2^k (support 2^{k-1} <= |zeta| <= 2^{k+2}); k = -1 is the complementary low
 * block, so the pieces sum to the identity exactly.
 *
 * ball: P_j for j >= 0 is computed as the literal cumulative sum of the
 * annulus pieces Delta_{-1} + ... + Delta_j.
 */
SpectralField lp_project(const SpectralField& f, LpMode mode, int index);

/// Per-site multiplier weights of Delta_k (annulus, k >= -1).
std::vector<double> lp_band_weights(const Grid& g, int k);

/// Per-site multiplier weights of P_j (low-pass), j >= 0.
std::vector<double> lp_ball_weights(const Grid& g, int j);

/// Largest band index whose annulus meets the grid's frequency lattice.
int max_band(const Grid& g);

/// Number of lattice sites with band-k weight >= min_weight.
std::size_t band_site_count(const Grid& g, int k, double min_weight = 0.5);

/// Apply a per-site weight table.
SpectralField apply_weights(const SpectralField& f, const std::vector<double>& w);

} // namespace zk

#endif
