#ifndef ZK_FIELD_HPP
#define ZK_FIELD_HPP

#include <complex>
#include <cstddef>
#include <new>
#include <string>
#include <vector>

#include "zk/grid.hpp"

namespace zk {

using cplx = std::complex<double>;

/// 64-byte aligned allocator so coefficient buffers satisfy FFTW's SIMD alignment.
template <class T>
struct AlignedAlloc {
    using value_type = T;
    AlignedAlloc() = default;
    template <class U>
    AlignedAlloc(const AlignedAlloc<U>&) {}
    T* allocate(std::size_t n) {
        return static_cast<T*>(::operator new(n * sizeof(T), std::align_val_t(64)));
    }
    void deallocate(T* p, std::size_t) noexcept { ::operator delete(p, std::align_val_t(64)); }
    template <class U>
    bool operator==(const AlignedAlloc<U>&) const { return true; }
};

using CoeffArray = std::vector<cplx, AlignedAlloc<cplx>>;

/** Complex Fourier coefficients of a function on a Grid.
 *
 * Storage is row-major in FFT order (nonnegative frequencies first, then the
 * negative half).  coeff(zeta) approximates the continuum transform with the
 * symmetric (2*pi)^{-d/2} normalization, so the weighted l2 norm of the
 * coefficients equals the physical L2 norm (discrete Parseval, exact).
 */
class SpectralField {
  public:
    SpectralField(Grid grid, std::string tag = {})
        : grid_(std::move(grid)), coeffs_(grid_.size(), cplx{0.0, 0.0}), tag_(std::move(tag)) {}
    SpectralField(Grid grid, CoeffArray coeffs, std::string tag = {});

    const Grid& grid() const { return grid_; }
    const CoeffArray& coeffs() const { return coeffs_; }
    CoeffArray& coeffs() { return coeffs_; }
    const std::string& tag() const { return tag_; }
    void set_tag(std::string tag) { tag_ = std::move(tag); }

    cplx operator[](std::size_t i) const { return coeffs_[i]; }
    cplx& operator[](std::size_t i) { return coeffs_[i]; }
    std::size_t size() const { return coeffs_.size(); }

    /// L2 norm under the Parseval weight (equals the physical L2 norm).
    double l2_norm() const;

    SpectralField& operator+=(const SpectralField& other);
    SpectralField& operator-=(const SpectralField& other);
    SpectralField& operator*=(double scale);

    /// c(zeta) <- (c(zeta) + conj(c(-zeta)))/2 and zero Nyquist planes; makes
    /// the represented function exactly real-valued.
    void hermitian_symmetrize();

    /// Exact symmetry check: c(-zeta) == conj(c(zeta)) and Nyquist planes zero.
    bool is_hermitian() const;

  private:
    Grid grid_;
    CoeffArray coeffs_;
    std::string tag_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double s, SpectralField f);

/// Flat index of the lattice site with the given signed per-axis indices.
std::size_t flat_index(const Grid& g, const std::vector<int>& signed_idx);

/// Distance between coefficient arrays in the Parseval-weighted l2 norm.
double l2_distance(const SpectralField& a, const SpectralField& b);

} // namespace zk

#endif
