#ifndef ZK_SYNTHESIZE_HPP
#define ZK_SYNTHESIZE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zk/field.hpp"
#include "zk/grid.hpp"

namespace zk {

/** Closed-form initial-data generator.  Deterministic: identical (grid, spec)
 * pairs give bitwise-identical coefficients. */
struct GeneratorSpec {
    enum class Kind { zero, gaussian, single_mode, random_band, rough };
    Kind kind = Kind::zero;

    double amplitude = 1.0;   ///< L2 target for random_band / single_mode; peak for gaussian; H^s target for rough
    double sigma = 1.0;       ///< gaussian width
    std::vector<int> mode;    ///< single_mode: signed lattice index per axis
    int band = 0;             ///< random_band: dyadic band index
    std::uint64_t seed = 0;   ///< random generators
    double s = 0.0;           ///< rough: Sobolev index pinning the spectrum decay
    double delta = 0.1;       ///< rough: excess decay, spectrum ~ <zeta>^{-s-d/2-delta}

    std::string describe() const;
};

SpectralField synthesize(const Grid& g, const GeneratorSpec& spec);

/** Parse "zero", "gaussian:sigma=1,amp=1", "single_mode:m=1;0",
 * "random_band:k=3,seed=7,amp=1", "rough:s=0.6,delta=0.1,seed=1,amp=0.2".
 * Throws UnknownGenerator for anything else. */
GeneratorSpec parse_generator(const std::string& text);

} // namespace zk

#endif
