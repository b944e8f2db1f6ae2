#ifndef ZK_GRID_HPP
#define ZK_GRID_HPP

#include <cstddef>
#include <vector>

namespace zk {

/** Periodic-box discretization: d axes, box side lengths, points per axis.
 *
 * The frequency lattice per axis is {2*pi*n/L : n in [-N/2, N/2)} and the
 * physical lattice is {n*L/N : n in [0, N)}.  Axis 0 is the x (= xi)
 * direction of the equation; axes 1..d-1 are the transverse y (= eta) block.
 */
class Grid {
  public:
    Grid(std::vector<double> lengths, std::vector<int> resolution);

    int dim() const { return static_cast<int>(lengths_.size()); }
    double length(int axis) const { return lengths_[axis]; }
    int points(int axis) const { return resolution_[axis]; }
    const std::vector<double>& lengths() const { return lengths_; }
    const std::vector<int>& resolution() const { return resolution_; }

    /// Total number of lattice points (= number of Fourier coefficients).
    std::size_t size() const { return size_; }

    double spacing(int axis) const { return lengths_[axis] / resolution_[axis]; }
    double freq_step(int axis) const;
    /// Largest representable frequency magnitude on the axis, (N/2-1)*2pi/L.
    double max_frequency(int axis) const;
    /// Smallest max_frequency over all axes.
    double max_frequency() const;

    /// Signed lattice index for storage index i in [0, N): i or i - N.
    int signed_index(int axis, int i) const {
        const int n = resolution_[axis];
        return i < n / 2 ? i : i - n;
    }
    double frequency(int axis, int i) const { return freq_step(axis) * signed_index(axis, i); }

    /// Physical cell volume (trapezoid weight of one sample on the torus).
    double cell_volume() const;
    /// Frequency cell volume, prod 2*pi/L_i; the Parseval weight.
    double freq_cell_volume() const;

    bool operator==(const Grid& other) const {
        return lengths_ == other.lengths_ && resolution_ == other.resolution_;
    }

  private:
    std::vector<double> lengths_;
    std::vector<int> resolution_;
    std::size_t size_ = 0;
};

/// Validating constructor mirroring the Grid invariants (even resolutions >= 8).
Grid make_grid(int dim, std::vector<double> lengths, std::vector<int> resolution);

/** Row-major odometer visit of every lattice site.
 * fn(flat_index, idx) where idx is the per-axis storage index. */
template <class F>
void for_each_site(const Grid& g, F&& fn) {
    const int d = g.dim();
    std::vector<int> idx(d, 0);
    const std::size_t n = g.size();
    for (std::size_t flat = 0; flat < n; ++flat) {
        fn(flat, idx);
        for (int ax = d - 1; ax >= 0; --ax) {
            if (++idx[ax] < g.points(ax)) break;
            idx[ax] = 0;
        }
    }
}

} // namespace zk

#endif
