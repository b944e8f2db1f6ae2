#ifndef ZK_PROPAGATOR_HPP
#define ZK_PROPAGATOR_HPP

#include <vector>

#include "zk/field.hpp"
#include "zk/grid.hpp"

namespace zk {

/** A sampled trajectory: one SpectralField per time.  Frames share the grid. */
struct SpaceTimeBlock {
    std::vector<double> times;
    std::vector<SpectralField> frames;

    const Grid& grid() const { return frames.front().grid(); }
    std::size_t size() const { return frames.size(); }
    bool empty() const { return frames.empty(); }
    double horizon() const { return times.empty() ? 0.0 : times.back(); }
};

/** Free group U(t): coefficient at (xi, eta) multiplied by
 * exp(i t xi (xi^2 + |eta|^2)).  Exact per-mode arithmetic; unitary; t may be
 * negative (group, not semigroup). */
SpectralField evolve(const SpectralField& f, double t);

/// frames[i] = evolve(f, i*T/(n_samples-1)); n_samples >= 2, T > 0.
SpaceTimeBlock trajectory(const SpectralField& f, double T, int n_samples);

/// Free trajectory sampled at explicitly given times.
SpaceTimeBlock trajectory_at(const SpectralField& f, const std::vector<double>& times);

/** Retarded integral D(t_i) = int_0^{t_i} U(t_i - t') g(t') dt' with the
 * trapezoid rule on the forcing samples and U applied exactly.  Uses the
 * integrating-factor accumulation D_i = U(t_i) sum w_j U(-t_j) g_j, one
 * multiplier application per frame. */
SpaceTimeBlock duhamel_integral(const SpaceTimeBlock& forcing);

/// Pointwise difference of two blocks on the same time grid.
SpaceTimeBlock block_difference(const SpaceTimeBlock& a, const SpaceTimeBlock& b);

} // namespace zk

#endif
