#include "zk/propagator.hpp"

#include <cmath>
#include <complex>

#include "zk/errors.hpp"
#include "zk/multipliers.hpp"

namespace zk {

SpectralField evolve(const SpectralField& f, double t) {
    if (!std::isfinite(t)) throw Error("evolve: time must be finite");
    if (t == 0.0) return f;
    return apply_multiplier(f, [t](double xi, double eta_sq) {
        return std::polar(1.0, t * xi * (xi * xi + eta_sq));
    });
}

SpaceTimeBlock trajectory(const SpectralField& f, double T, int n_samples) {
    if (!(T > 0.0) || n_samples < 2) {
        throw Error("trajectory: need T > 0 and n_samples >= 2");
    }
    std::vector<double> times(n_samples);
    for (int i = 0; i < n_samples; ++i) times[i] = T * i / (n_samples - 1);
    return trajectory_at(f, times);
}

SpaceTimeBlock trajectory_at(const SpectralField& f, const std::vector<double>& times) {
    SpaceTimeBlock block;
    block.times = times;
    block.frames.reserve(times.size());
    for (double t : times) block.frames.push_back(evolve(f, t));
    return block;
}

SpaceTimeBlock duhamel_integral(const SpaceTimeBlock& forcing) {
    if (forcing.empty()) throw EmptyBlock("duhamel_integral: empty forcing block");
    SpaceTimeBlock out;
    out.times = forcing.times;
    out.frames.reserve(forcing.size());

    // Running trapezoid of g_j = U(-t_j) f_j; D_i = U(t_i) A_i.
    SpectralField acc(forcing.grid());
    SpectralField prev = evolve(forcing.frames[0], -forcing.times[0]);
    out.frames.push_back(SpectralField(forcing.grid()));
    for (std::size_t i = 1; i < forcing.size(); ++i) {
        SpectralField cur = evolve(forcing.frames[i], -forcing.times[i]);
        const double half_dt = 0.5 * (forcing.times[i] - forcing.times[i - 1]);
        SpectralField sum = prev;
        sum += cur;
        sum *= half_dt;
        acc += sum;
        out.frames.push_back(evolve(acc, forcing.times[i]));
        prev = std::move(cur);
    }
    return out;
}

SpaceTimeBlock block_difference(const SpaceTimeBlock& a, const SpaceTimeBlock& b) {
    if (a.times != b.times) throw TimeGridMismatch("block_difference: time grids differ");
    SpaceTimeBlock out;
    out.times = a.times;
    out.frames.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.frames.push_back(a.frames[i] - b.frames[i]);
    }
    return out;
}

} // namespace zk
