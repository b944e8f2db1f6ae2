#ifndef ZK_MIXED_NORM_HPP
#define ZK_MIXED_NORM_HPP

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "zk/propagator.hpp"

namespace zk {

constexpr double kInfExponent = std::numeric_limits<double>::infinity();

enum class NormAxis { x, y, t };

/** One stage of an iterated norm: an axis group and its exponent. */
struct NormStage {
    std::vector<NormAxis> axes;
    double exponent = 2.0;
};

/** Ordered stages, outermost first, partitioning {x, y, t}.
 * L^p_x L^inf_{y,t} is stages = [({x}, p), ({y,t}, inf)]. */
struct MixedNormSpec {
    std::vector<NormStage> stages;

    void validate() const;
    std::string describe() const;

    /// "x:4 yt:inf" (outermost first), exponents "inf" or numeric.
    static MixedNormSpec parse(const std::string& text);
};

/** Discrete iterated norm of |u| over the sampled trajectory.
 *
 * Space integrals use the periodic trapezoid rule on the oversampled
 * lattice, the time integral uses the trapezoid rule on the block's sample
 * times, and infinite exponents are maxima over the discrete points.
 * probability = true normalizes every axis measure to total mass 1 (used by
 * the Jensen-monotonicity checks). */
double mixed_norm(const SpaceTimeBlock& block, const MixedNormSpec& spec, int oversample = 2,
                  bool probability = false);

enum class YsVariant { two_d, high_d, tilde3 };

struct YsConfig {
    YsVariant variant = YsVariant::high_d;
    double s = 0.0;
    double eps = 0.01;   ///< the "+" in limiting exponents
    double s0 = 0.75;    ///< hypothetical 2-d maximal regularity (configurable)
    int oversample = 2;
};

/** Composite per-band norm: the sum of the three stage norms of the chosen
 * variant (sup-in-time Sobolev, smoothing, maximal). */
double ys_norm(const SpaceTimeBlock& block, const YsConfig& cfg);

struct CompositeNormReport {
    std::map<int, double> per_band; ///< band j -> Y^s of Delta_j u (j = 0 holds the full low block)
    double total = 0.0;             ///< sqrt(sum (2^{s j} per_band[j])^2)
};

/** Dyadic aggregate: per-band Y^s values with weights 2^{s j}, bands truncated
 * at the grid's Nyquist band.  Band 0 includes the low block so the pieces
 * reconstruct the identity. */
CompositeNormReport xs_norm(const SpaceTimeBlock& block, const YsConfig& cfg);

/// X^s distance between two blocks on the same time grid: xs_norm of the difference.
double xs_distance(const SpaceTimeBlock& a, const SpaceTimeBlock& b, const YsConfig& cfg);

} // namespace zk

#endif
