#ifndef ZK_ESTIMATE_PROBE_HPP
#define ZK_ESTIMATE_PROBE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zk/field.hpp"
#include "zk/grid.hpp"
#include "zk/scaling_fit.hpp"

namespace zk {

enum class ProbeKind {
    strichartz,
    dispersion_lp,
    kato,
    maximal_L4,
    maximal_L4xy,
    retarded_group,
    retarded_smooth,
    retarded_max,
    conjecture_p3,
};

std::string probe_kind_name(ProbeKind kind);
ProbeKind probe_kind_from_name(const std::string& name);

/** Parameters shared by the probes; each kind reads the fields it needs.
 * s is the Sobolev regularity on the right-hand side where the estimate has
 * one; the limiting "sigma+" exponents are probed at sigma + eps. */
struct ProbeParams {
    double q = 4.0;
    double r = 4.0;
    double p = 4.0;
    double s = 0.0;
    double T = 1.0;
    double t = 1.0; ///< evaluation time for the fixed-time dispersion probe
    int n_samples = 33;
    int oversample = 2;
    double eps = 0.05;
    std::uint64_t base_seed = 1;
};

/** Per-band empirical LHS/RHS ratios of one inequality over random
 * band-limited data (or forcing, for the retarded kinds). */
struct RatioStats {
    ProbeKind kind;
    int band = 0;
    int samples = 0;
    std::vector<double> ratios; ///< one entry per seed, in seed order
    double max = 0.0;
    double median = 0.0;
    ProbeParams params;
};

RatioStats ratio_probe(const Grid& g, ProbeKind kind, int band, const ProbeParams& params,
                       int n_seeds);

/** Slope of log2(max ratio) against the band index; flat (slope ~ 0) means
 * the inequality's regularity weight is correct at this s. */
ScalingFitReport band_flatness(const Grid& g, ProbeKind kind, const ProbeParams& params,
                               const std::vector<int>& bands, int n_seeds);

/// Real-valued random band-k datum: complex Gaussian coefficients on the
/// band, Hermitian-symmetrized, L2-normalized.
SpectralField random_band_field(const Grid& g, int band, std::uint64_t seed);

/** Randomly modulated coherent band-k datum: the band bump with near-aligned
 * phases, coeff = w_k(zeta) (1 + modulation * gaussian).  The maximal-type
 * probes draw from this family because phase-aligned data is what saturates
 * sup-in-time estimates; isotropic Gaussian data stays far below the sharp
 * growth rate. */
SpectralField coherent_band_field(const Grid& g, int band, std::uint64_t seed,
                                  double modulation = 0.3);

/// Smooth separable forcing profile a(t) used by the retarded probes.
std::vector<double> forcing_profile(const std::vector<double>& times, std::uint64_t seed);

} // namespace zk

#endif
