#ifndef ZK_RNG_HPP
#define ZK_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace zk {

/// splitmix64 round; used to derive independent per-task seeds from a base seed.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/** Deterministic random source.
 *
 * mt19937_64 is fully specified by the standard and the Gaussian draw is a
 * hand-rolled Box-Muller, so identical seeds give identical streams on every
 * platform (std::normal_distribution would not). */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller.
    double gauss() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Complex normal with independent N(0,1) real and imaginary parts.
    std::complex<double> cgauss() {
        const double re = gauss();
        return {re, gauss()};
    }

  private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace zk

#endif
