#include "zk/grid.hpp"

#include <cmath>
#include <string>

#include "zk/errors.hpp"

namespace zk {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Grid::Grid(std::vector<double> lengths, std::vector<int> resolution)
    : lengths_(std::move(lengths)), resolution_(std::move(resolution)) {
    if (lengths_.empty() || lengths_.size() != resolution_.size()) {
        throw DimensionMismatch("grid: lengths and resolution must have equal, nonzero size");
    }
    size_ = 1;
    for (std::size_t ax = 0; ax < lengths_.size(); ++ax) {
        if (!(lengths_[ax] > 0.0)) {
            throw DimensionMismatch("grid: nonpositive length on axis " + std::to_string(ax));
        }
        const int n = resolution_[ax];
        if (n < 8 || n % 2 != 0) {
            throw InvalidResolution("grid: resolution on axis " + std::to_string(ax) +
                                    " must be even and >= 8, got " + std::to_string(n));
        }
        size_ *= static_cast<std::size_t>(n);
    }
}

double Grid::freq_step(int axis) const { return kTwoPi / lengths_[axis]; }

double Grid::max_frequency(int axis) const {
    return freq_step(axis) * (resolution_[axis] / 2 - 1);
}

double Grid::max_frequency() const {
    double m = max_frequency(0);
    for (int ax = 1; ax < dim(); ++ax) m = std::min(m, max_frequency(ax));
    return m;
}

double Grid::cell_volume() const {
    double v = 1.0;
    for (int ax = 0; ax < dim(); ++ax) v *= spacing(ax);
    return v;
}

double Grid::freq_cell_volume() const {
    double v = 1.0;
    for (int ax = 0; ax < dim(); ++ax) v *= freq_step(ax);
    return v;
}

Grid make_grid(int dim, std::vector<double> lengths, std::vector<int> resolution) {
    if (dim <= 0 || static_cast<std::size_t>(dim) != lengths.size() ||
        static_cast<std::size_t>(dim) != resolution.size()) {
        throw DimensionMismatch("make_grid: dim does not match lengths/resolution");
    }
    return Grid(std::move(lengths), std::move(resolution));
}

} // namespace zk
