#include "zk/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zk/bumps.hpp"
#include "zk/errors.hpp"

namespace zk {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// Lookup table for kernel_profile on [0, 2.0625]; linear interpolation is
/// accurate to ~2e-9 at this density, far below the 1e-6 quadrature target.
double psi_lookup(double r) {
    constexpr int kN = 1 << 16;
    constexpr double kMax = 2.0625;
    static const std::vector<double> table = [] {
        std::vector<double> t(kN + 1);
        for (int i = 0; i <= kN; ++i) t[i] = kernel_profile(kMax * i / kN);
        return t;
    }();
    if (r >= kMax || r <= 0.5) return 0.0;
    const double u = r * (kN / kMax);
    const int i = static_cast<int>(u);
    const double frac = u - i;
    return table[i] + frac * (table[i + 1] - table[i]);
}

struct Axis {
    int n;
    double step;
    double start;
};

Axis make_axis(double start, double end, double rate, const QuadratureSpec& spec) {
    const double len = end - start;
    const double density = spec.base_density + spec.points_per_radian * rate;
    int n = static_cast<int>(std::ceil(len * density)) + 1;
    n = std::max(n, 33);
    return Axis{n, len / (n - 1), start};
}

} // namespace

KernelSample dispersion_kernel_impl(double t, const std::vector<double>& z, int d,
                                    const QuadratureSpec& spec, bool phase_on) {
    if (t == 0.0) throw PreconditionViolation("dispersion_kernel: t must be nonzero");
    if (d != 2 && d != 3) throw UnsupportedKind("dispersion_kernel: d must be 2 or 3");
    if (static_cast<int>(z.size()) != d) {
        throw DimensionMismatch("dispersion_kernel: z must have d entries");
    }
    const double z1 = z[0];
    double zp = 0.0; // |z'| of the transverse block
    for (int i = 1; i < d; ++i) zp = std::hypot(zp, z[i]);

    const double at = std::abs(t);
    const Axis ax = make_axis(-2.0, 2.0, phase_on ? 12.0 * at + std::abs(z1) : 0.0, spec);
    const Axis ar = make_axis(0.0, 2.0, (phase_on ? 4.0 * at : 0.0) + zp, spec);

    const std::size_t cells =
        static_cast<std::size_t>(ax.n) * static_cast<std::size_t>(ar.n);
    if (cells > spec.max_cells) {
        throw QuadratureBudgetExceeded("dispersion_kernel: " + std::to_string(cells) +
                                       " cells exceed budget " +
                                       std::to_string(spec.max_cells));
    }

    // Transverse kernel K(rho), trapezoid weight folded in:
    //   d=3: 2*pi*J0(|z'| rho)*rho  (polar reduction of the eta integral)
    //   d=2: 2*cos(|z'| rho)        (even extension of the eta line integral)
    std::vector<double> kweight(ar.n);
    for (int j = 0; j < ar.n; ++j) {
        const double rho = ar.start + j * ar.step;
        double kv = d == 3 ? 2.0 * kPi * std::cyl_bessel_j(0.0, zp * rho) * rho
                           : 2.0 * std::cos(zp * rho);
        if (j == 0 || j == ar.n - 1) kv *= 0.5;
        kweight[j] = kv * ar.step;
    }

    std::complex<double> total{0.0, 0.0};
    const double dr2 = ar.step * ar.step;
    for (int i = 0; i < ax.n; ++i) {
        const double xi = ax.start + i * ax.step;
        // phase(rho) = t*xi*rho^2 + (t*xi^3 + z1*xi) is quadratic in rho, so
        // the complex exponential advances with a two-term recurrence.
        std::complex<double> e = phase_on
            ? std::polar(1.0, t * xi * xi * xi + z1 * xi)
            : std::complex<double>{1.0, 0.0};
        std::complex<double> dstep = phase_on ? std::polar(1.0, t * xi * dr2)
                                              : std::complex<double>{1.0, 0.0};
        const std::complex<double> q = phase_on ? std::polar(1.0, 2.0 * t * xi * dr2)
                                                : std::complex<double>{1.0, 0.0};
        std::complex<double> row{0.0, 0.0};
        const double xi2 = xi * xi;
        for (int j = 0; j < ar.n; ++j) {
            const double rho = ar.start + j * ar.step;
            const double psi = psi_lookup(std::sqrt(xi2 + rho * rho));
            if (psi != 0.0) row += (psi * kweight[j]) * e;
            e *= dstep;
            dstep *= q;
        }
        if (d == 3) {
            // Euler-Maclaurin endpoint term at rho = 0: the polar weight
            // 2*pi*rho*J0 has slope 2*pi there, so trapezoid is only O(h^2)
            // without the correction  int ~ T + h^2/12 * f'(0).
            const double fp0 = 2.0 * kPi * psi_lookup(std::abs(xi));
            if (fp0 != 0.0) {
                const std::complex<double> e0 =
                    phase_on ? std::polar(1.0, t * xi * xi * xi + z1 * xi)
                             : std::complex<double>{1.0, 0.0};
                row += (dr2 / 12.0) * fp0 * e0;
            }
        }
        double wxi = ax.step;
        if (i == 0 || i == ax.n - 1) wxi *= 0.5;
        total += wxi * row;
    }

    KernelSample sample;
    sample.t = t;
    sample.z = z;
    sample.value = total;
    return sample;
}

KernelSample dispersion_kernel(double t, const std::vector<double>& z, int d,
                               const QuadratureSpec& spec) {
    return dispersion_kernel_impl(t, z, d, spec, true);
}

KernelSample kernel_sup_z_impl(double t, int d, const QuadratureSpec& qspec,
                               const SupSearchSpec& sspec, bool phase_on) {
    std::vector<std::vector<double>> candidates;
    candidates.push_back(std::vector<double>(d, 0.0));
    for (int a = 0; a < sspec.n_angles; ++a) {
        const double alpha = sspec.n_angles == 1 ? 0.0
                                                 : 0.5 * kPi * a / (sspec.n_angles - 1);
        const double c = std::cos(alpha), s = std::sin(alpha);
        // Stationary ray of the phase at |xi| = 1: grad(xi_1 |xi|^2) scaled by -t.
        const double v1 = 1.0 + 2.0 * c * c;
        const double v2 = 2.0 * c * s;
        for (double mu : sspec.radial_multipliers) {
            std::vector<double> z(d, 0.0);
            z[0] = -t * mu * v1;
            z[1] = -t * mu * v2;
            candidates.push_back(std::move(z));
        }
    }
    KernelSample best;
    best.t = t;
    double best_mag = -1.0;
    for (const auto& z : candidates) {
        KernelSample s = dispersion_kernel_impl(t, z, d, qspec, phase_on);
        if (std::abs(s.value) > best_mag) {
            best_mag = std::abs(s.value);
            best = std::move(s);
        }
    }
    return best;
}

KernelSample kernel_sup_z(double t, int d, const QuadratureSpec& qspec,
                          const SupSearchSpec& sspec) {
    return kernel_sup_z_impl(t, d, qspec, sspec, true);
}

ScalingFitReport decay_fit(const std::vector<double>& t_list, int d,
                           const QuadratureSpec& qspec, const SupSearchSpec& sspec,
                           bool phase_on) {
    if (t_list.size() < 8) throw PreconditionViolation("decay_fit: need >= 8 times");
    const auto [mn, mx] = std::minmax_element(t_list.begin(), t_list.end());
    if (!(*mn > 0.0) || std::log10(*mx / *mn) < 1.5 - 1e-12) {
        throw PreconditionViolation("decay_fit: times must span >= 1.5 decades");
    }
    std::vector<std::pair<double, double>> pts;
    pts.reserve(t_list.size());
    for (double t : t_list) {
        const KernelSample s = kernel_sup_z_impl(t, d, qspec, sspec, phase_on);
        pts.emplace_back(std::log2(t), std::log2(std::abs(s.value)));
    }
    return fit_loglog(std::move(pts));
}

double kernel_mass_oracle(int d, int n_points) {
    if (d != 2 && d != 3) throw UnsupportedKind("kernel_mass_oracle: d must be 2 or 3");
    if (n_points % 2 == 0) ++n_points;
    const double a = 0.25, b = 2.25;
    const double h = (b - a) / (n_points - 1);
    const double surface = d == 3 ? 4.0 * kPi : 2.0 * kPi;
    double s = 0.0;
    for (int i = 0; i < n_points; ++i) {
        const double rho = a + i * h;
        const double f = kernel_profile(rho) * std::pow(rho, d - 1);
        const double w = (i == 0 || i == n_points - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        s += w * f;
    }
    return surface * s * h / 3.0;
}

} // namespace zk
