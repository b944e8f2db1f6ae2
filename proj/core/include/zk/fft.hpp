#ifndef ZK_FFT_HPP
#define ZK_FFT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "zk/field.hpp"
#include "zk/grid.hpp"

namespace zk::fft {

/** Forward transform of physical samples on the grid lattice.
 *
 * Normalization: coeff = (2*pi)^{-d/2} * prod(L_i/N_i) * DFT(samples), the
 * discrete form of the symmetric-convention continuum transform.  With this
 * scaling Parseval holds with constant 1 against Grid::freq_cell_volume().
 */
SpectralField forward(const Grid& g, const CoeffArray& physical, std::string tag = {});

/// Inverse transform: samples of the trigonometric interpolant on the grid lattice.
CoeffArray inverse(const SpectralField& f);

struct PhysicalEval {
    Grid fine_grid;
    CoeffArray values;
};

/** Zero-padded inverse transform sampling the interpolant on a lattice
 * oversample times finer per axis.  oversample in {1,2,4,8}. */
PhysicalEval evaluate_physical(const SpectralField& f, int oversample);

/// Memory cap (in complex entries) for padded physical evaluations.
void set_eval_cap(std::size_t max_entries);
std::size_t eval_cap();

/// Coefficients copied onto a finer lattice with the same box lengths.
SpectralField embed(const SpectralField& f, const std::vector<int>& fine_resolution);

/// Coefficients restricted to a coarser lattice (drops unrepresentable modes).
SpectralField restrict_to(const SpectralField& f, const Grid& coarse);

/// Physical samples of f on a padded lattice (embed + inverse).
CoeffArray padded_samples(const SpectralField& f, const Grid& padded);

/// Forward transform of padded samples, restricted back to the base lattice.
SpectralField forward_restricted(const Grid& padded, const CoeffArray& samples, const Grid& base);

/** Padded grid for exact products of `factors` band-limited fields:
 * resolution ceil(pad_factor*N) rounded up to even, pad_factor >= (factors+1)/2. */
Grid padded_grid(const Grid& base, double pad_factor);

/** Dealiased pointwise power u^power computed on a padded lattice and
 * restricted to the base lattice.  Exact when pad_factor >= (power+1)/2.
 * take_real drops the imaginary part of the samples before powering. */
SpectralField pointwise_power(const SpectralField& f, int power, double pad_factor,
                              bool take_real = true);

} // namespace zk::fft

#endif
