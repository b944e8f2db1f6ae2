#include "zk/field.hpp"

#include <cmath>

#include "zk/errors.hpp"

namespace zk {

SpectralField::SpectralField(Grid grid, CoeffArray coeffs, std::string tag)
    : grid_(std::move(grid)), coeffs_(std::move(coeffs)), tag_(std::move(tag)) {
    if (coeffs_.size() != grid_.size()) {
        throw DimensionMismatch("field: coefficient count does not match grid size");
    }
}

double SpectralField::l2_norm() const {
    double s = 0.0;
    for (const cplx& c : coeffs_) s += std::norm(c);
    return std::sqrt(s * grid_.freq_cell_volume());
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
    if (!(grid_ == other.grid_)) throw DimensionMismatch("field +=: grids differ");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
    if (!(grid_ == other.grid_)) throw DimensionMismatch("field -=: grids differ");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

SpectralField& SpectralField::operator*=(double scale) {
    for (cplx& c : coeffs_) c *= scale;
    return *this;
}

namespace {

/// Flat index of the reflection zeta -> -zeta (per-axis i -> (N-i) mod N).
std::size_t reflect_index(const Grid& g, const std::vector<int>& idx) {
    std::size_t flat = 0;
    for (int ax = 0; ax < g.dim(); ++ax) {
        const int n = g.points(ax);
        const int r = idx[ax] == 0 ? 0 : n - idx[ax];
        flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(r);
    }
    return flat;
}

bool on_nyquist(const Grid& g, const std::vector<int>& idx) {
    for (int ax = 0; ax < g.dim(); ++ax) {
        if (idx[ax] == g.points(ax) / 2) return true;
    }
    return false;
}

} // namespace

void SpectralField::hermitian_symmetrize() {
    CoeffArray out(coeffs_.size());
    for_each_site(grid_, [&](std::size_t flat, const std::vector<int>& idx) {
        if (on_nyquist(grid_, idx)) {
            out[flat] = cplx{0.0, 0.0};
            return;
        }
        const std::size_t r = reflect_index(grid_, idx);
        out[flat] = 0.5 * (coeffs_[flat] + std::conj(coeffs_[r]));
    });
    coeffs_ = std::move(out);
}

bool SpectralField::is_hermitian() const {
    bool ok = true;
    for_each_site(grid_, [&](std::size_t flat, const std::vector<int>& idx) {
        if (!ok) return;
        if (on_nyquist(grid_, idx)) {
            if (coeffs_[flat] != cplx{0.0, 0.0}) ok = false;
            return;
        }
        const std::size_t r = reflect_index(grid_, idx);
        if (coeffs_[flat] != std::conj(coeffs_[r])) ok = false;
    });
    return ok;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double s, SpectralField f) { return f *= s; }

std::size_t flat_index(const Grid& g, const std::vector<int>& signed_idx) {
    if (static_cast<int>(signed_idx.size()) != g.dim()) {
        throw DimensionMismatch("flat_index: wrong index arity");
    }
    std::size_t flat = 0;
    for (int ax = 0; ax < g.dim(); ++ax) {
        const int n = g.points(ax);
        int m = signed_idx[ax];
        if (m < -n / 2 || m >= n / 2) throw DimensionMismatch("flat_index: index out of lattice");
        if (m < 0) m += n;
        flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(m);
    }
    return flat;
}

double l2_distance(const SpectralField& a, const SpectralField& b) {
    if (!(a.grid() == b.grid())) throw DimensionMismatch("l2_distance: grids differ");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s * a.grid().freq_cell_volume());
}

} // namespace zk
