#include "zk/gzk.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zk/errors.hpp"
#include "zk/fft.hpp"
#include "zk/littlewood_paley.hpp"
#include "zk/multipliers.hpp"

namespace zk {

namespace {

double corner_frequency(const Grid& g) {
    double s = 0.0;
    for (int ax = 0; ax < g.dim(); ++ax) {
        const double m = g.max_frequency(ax);
        s += m * m;
    }
    return std::sqrt(s);
}

double max_abs_physical(const SpectralField& f) {
    const CoeffArray vals = fft::inverse(f);
    double m = 0.0;
    for (const cplx& v : vals) m = std::max(m, std::abs(v));
    return m;
}

std::vector<double> two_thirds_mask(const Grid& g) {
    std::vector<double> mask(g.size(), 1.0);
    for_each_site(g, [&](std::size_t flat, const std::vector<int>& idx) {
        for (int ax = 0; ax < g.dim(); ++ax) {
            if (std::abs(g.signed_index(ax, idx[ax])) > g.points(ax) / 3) {
                mask[flat] = 0.0;
                return;
            }
        }
    });
    return mask;
}

/** The stepped term N(u) = -lambda * d_x P (u^{k+1}) on Fourier coefficients. */
class NonlinearTerm {
  public:
    NonlinearTerm(const Grid& g, const SolverConfig& cfg) : cfg_(cfg) {
        if (cfg.dealiasing == SolverConfig::Dealiasing::two_thirds) {
            mask_ = two_thirds_mask(g);
        } else {
            pad_factor_ = 0.5 * (cfg.k_power + 2);
        }
        if (cfg.project_ball >= 0) proj_ = lp_ball_weights(g, cfg.project_ball);
    }

    SpectralField operator()(const SpectralField& u_hat) const {
        if (cfg_.nonlinear_scale == 0.0) return SpectralField(u_hat.grid());
        SpectralField p = power(u_hat);
        const double lambda = cfg_.nonlinear_scale;
        SpectralField out = apply_multiplier(p, [lambda](double xi, double) {
            return cplx{0.0, -lambda * xi};
        });
        if (!proj_.empty()) out = apply_weights(out, proj_);
        return out;
    }

    /// Relative first-call defect of the two_thirds rule against full padding.
    double aliasing_defect(const SpectralField& u_hat) const {
        if (mask_.empty()) return 0.0;
        const SpectralField cheap = power(u_hat);
        const SpectralField exact =
            fft::pointwise_power(u_hat, cfg_.k_power + 1, 0.5 * (cfg_.k_power + 2));
        const double ref = exact.l2_norm();
        return ref > 0.0 ? l2_distance(cheap, exact) / ref : 0.0;
    }

  private:
    SpectralField power(const SpectralField& u_hat) const {
        if (!mask_.empty()) {
            SpectralField truncated = apply_weights(u_hat, mask_);
            SpectralField p = fft::pointwise_power(truncated, cfg_.k_power + 1, 1.0);
            return apply_weights(p, mask_);
        }
        return fft::pointwise_power(u_hat, cfg_.k_power + 1, pad_factor_);
    }

    const SolverConfig& cfg_;
    std::vector<double> mask_;
    std::vector<double> proj_;
    double pad_factor_ = 1.0;
};

void validate_config(const SolverConfig& cfg) {
    if (cfg.k_power < 1) throw PreconditionViolation("solver: k_power >= 1");
    if (!(cfg.T > 0.0) || !(cfg.dt > 0.0) || cfg.dt > cfg.T) {
        throw PreconditionViolation("solver: need 0 < dt <= T");
    }
    if (cfg.n_samples < 2) throw PreconditionViolation("solver: n_samples >= 2");
}

} // namespace

double mass(const SpectralField& u) {
    const double n = u.l2_norm();
    return n * n;
}

double hamiltonian(const SpectralField& u, int k_power) {
    double kinetic = 0.0;
    const CoeffArray& c = u.coeffs();
    for_each_mode(u.grid(), [&](std::size_t i, double xi, double eta_sq) {
        kinetic += (xi * xi + eta_sq) * std::norm(c[i]);
    });
    kinetic *= 0.5 * u.grid().freq_cell_volume();

    const int q = k_power + 2;
    const Grid padded = fft::padded_grid(u.grid(), 0.5 * (q + 1));
    const CoeffArray vals = fft::padded_samples(u, padded);
    double potential = 0.0;
    for (const cplx& v : vals) potential += std::pow(v.real(), q);
    potential *= padded.cell_volume() / q;
    return kinetic - potential;
}

SpaceTimeBlock solve(const SpectralField& u0, const SolverConfig& cfg, SolveInfo* info) {
    validate_config(cfg);
    const Grid& g = u0.grid();
    const NonlinearTerm nonlinear(g, cfg);

    // Stability gate: exact linear flow leaves only the transport-type CFL
    // constraint from the stepped nonlinear term.
    const double zeta_max = corner_frequency(g);
    if (cfg.nonlinear_scale != 0.0) {
        const double umax = max_abs_physical(u0);
        const double bound = cfg.c_stab / std::max(umax * zeta_max, 1e-300);
        if (cfg.dt > bound) {
            throw StabilityViolation("solver: dt " + std::to_string(cfg.dt) +
                                     " exceeds stability bound " + std::to_string(bound));
        }
    }

    const double sample_dt = cfg.T / (cfg.n_samples - 1);
    const int steps_per = std::max(1, static_cast<int>(std::ceil(sample_dt / cfg.dt - 1e-12)));
    const double h = sample_dt / steps_per;

    const bool enforce_reality = u0.is_hermitian();
    const double mass0 = mass(u0);
    const double ham0 = cfg.nonlinear_scale != 0.0 ? hamiltonian(u0, cfg.k_power) : 0.0;

    SpaceTimeBlock out;
    out.times.resize(cfg.n_samples);
    for (int i = 0; i < cfg.n_samples; ++i) out.times[i] = sample_dt * i;
    out.frames.reserve(cfg.n_samples);
    out.frames.push_back(u0);

    SolveInfo local;
    local.dt_effective = h;
    local.residual_aliasing =
        cfg.dealiasing == SolverConfig::Dealiasing::two_thirds && cfg.nonlinear_scale != 0.0
            ? nonlinear.aliasing_defect(u0)
            : 0.0;

    SpectralField u = u0;
    for (int si = 1; si < cfg.n_samples; ++si) {
        for (int st = 0; st < steps_per; ++st) {
            // Integrating-factor classical RK4 on v = U(-t) u.
            const SpectralField k1 = nonlinear(u);
            SpectralField half = k1;
            half *= 0.5 * h;
            half += u;
            const SpectralField k2 = nonlinear(evolve(half, 0.5 * h));

            SpectralField uh = evolve(u, 0.5 * h);
            SpectralField stage3 = k2;
            stage3 *= 0.5 * h;
            stage3 += uh;
            const SpectralField k3 = nonlinear(stage3);

            SpectralField stage4 = evolve(k3, 0.5 * h);
            stage4 *= h;
            stage4 += evolve(u, h);
            const SpectralField k4 = nonlinear(stage4);

            SpectralField acc = evolve(k1, h);
            SpectralField mid = k2 + k3;
            mid = evolve(mid, 0.5 * h);
            mid *= 2.0;
            acc += mid;
            acc += k4;
            acc *= h / 6.0;
            u = evolve(u, h);
            u += acc;
            if (enforce_reality && cfg.nonlinear_scale != 0.0) u.hermitian_symmetrize();
            ++local.steps;
        }
        out.frames.push_back(u);

        const double drift = std::abs(mass(u) - mass0) / std::max(mass0, 1e-300);
        local.mass_drift = std::max(local.mass_drift, drift);
        if (cfg.nonlinear_scale != 0.0 && drift > 1e-4) {
            throw StabilityViolation("solver: mass drift " + std::to_string(drift) +
                                     " at t=" + std::to_string(out.times[si]));
        }
    }
    if (cfg.nonlinear_scale != 0.0) {
        const double ham_t = hamiltonian(out.frames.back(), cfg.k_power);
        local.hamiltonian_drift = std::abs(ham_t - ham0) / std::max(std::abs(ham0), 1e-300);
    }
    if (info) *info = local;
    return out;
}

SpaceTimeBlock duhamel_apply(const SpaceTimeBlock& traj, const SpectralField& u0,
                             const SolverConfig& cfg) {
    if (traj.empty()) throw EmptyBlock("duhamel_apply: empty trajectory");
    if (!(traj.grid() == u0.grid())) throw TimeGridMismatch("duhamel_apply: grids differ");
    const NonlinearTerm nonlinear(u0.grid(), cfg);

    SpaceTimeBlock forcing;
    forcing.times = traj.times;
    forcing.frames.reserve(traj.size());
    for (const SpectralField& f : traj.frames) forcing.frames.push_back(nonlinear(f));

    SpaceTimeBlock integral = duhamel_integral(forcing);
    SpaceTimeBlock out = trajectory_at(u0, traj.times);
    for (std::size_t i = 0; i < out.size(); ++i) out.frames[i] += integral.frames[i];
    return out;
}

std::pair<SpaceTimeBlock, PicardTrace> picard_solve(const SpectralField& u0,
                                                    const SolverConfig& cfg) {
    validate_config(cfg);
    YsConfig ys;
    ys.variant = u0.grid().dim() == 2 ? YsVariant::two_d : YsVariant::high_d;
    ys.s = cfg.s;
    ys.eps = cfg.eps;
    ys.s0 = cfg.s0;
    ys.oversample = cfg.oversample;

    SpaceTimeBlock current = trajectory(u0, cfg.T, cfg.n_samples);
    const double base = xs_norm(current, ys).total;
    const double tol = 1e-8 * std::max(base, 1e-300);

    PicardTrace trace;
    int rising = 0;
    for (int it = 0; it < cfg.picard_max_iter; ++it) {
        SpaceTimeBlock next = duhamel_apply(current, u0, cfg);
        const double diff = xs_distance(next, current, ys);
        current = std::move(next);
        if (!trace.diffs.empty() && (!std::isfinite(diff) || diff >= trace.diffs.back())) {
            if (++rising >= 3) {
                throw NoContraction("picard: diffs non-decreasing for 3 iterations (T too "
                                    "large for the data size)");
            }
        } else {
            rising = 0;
        }
        trace.diffs.push_back(diff);
        if (diff < tol) {
            trace.converged = true;
            break;
        }
    }

    // Geometric ratio from the log-linear fit of the positive diffs.
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < trace.diffs.size(); ++i) {
        if (trace.diffs[i] > 0.0) {
            pts.emplace_back(static_cast<double>(i), std::log(trace.diffs[i]));
        }
    }
    if (pts.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (auto& [x, y] : pts) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double n = static_cast<double>(pts.size());
        trace.contraction_factor = std::exp((n * sxy - sx * sy) / (n * sxx - sx * sx));
    }
    return {std::move(current), std::move(trace)};
}

double paraproduct_check(const SpectralField& u, int k_power, int band) {
    if (k_power < 1) throw PreconditionViolation("paraproduct_check: k_power >= 1");
    if (band < 0) throw PreconditionViolation("paraproduct_check: band >= 0");
    const Grid& g = u.grid();
    const int m = k_power + 1;
    const double pad = 0.5 * (m + 1);
    const Grid padded = fft::padded_grid(g, pad);
    const int jmax = max_band(g);

    // Terms below j0 vanish under Delta_band by support arithmetic:
    // m factors of frequency <= 2^{j+3} cannot reach the annulus 2^{band-1}.
    const int j0 = std::max(0, static_cast<int>(std::ceil(band - 4.0 - std::log2(double(m)))));

    const SpectralField lhs =
        lp_project(fft::pointwise_power(u, m, pad, /*take_real=*/false), LpMode::annulus, band);

    // Padded samples of the ball and annulus pieces.
    std::vector<CoeffArray> pj(jmax + 2);
    pj[0] = fft::padded_samples(lp_project(u, LpMode::ball, 0), padded);
    for (int j = std::max(j0, 1); j <= jmax + 1; ++j) {
        pj[j] = fft::padded_samples(lp_project(u, LpMode::ball, j), padded);
    }
    std::vector<CoeffArray> dj(jmax + 2);
    for (int j = j0 + 1; j <= jmax + 1; ++j) {
        dj[j] = fft::padded_samples(lp_project(u, LpMode::annulus, j), padded);
    }

    // (P_0 u)^m + sum_{j >= j0} (Delta_{j+1} u) sum_s (P_{j+1} u)^s (P_j u)^{m-1-s}.
    // Dropping j < j0 is exact only after the Delta_band projection below; the
    // check exercises precisely that support arithmetic.
    const std::size_t npts = padded.size();
    CoeffArray acc(npts, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < npts; ++i) {
        cplx p{1.0, 0.0};
        for (int s = 0; s < m; ++s) p *= pj[0][i];
        acc[i] = p;
    }
    for (int j = j0; j <= jmax; ++j) {
        const CoeffArray& lo = pj[j];
        const CoeffArray& hi = pj[j + 1];
        const CoeffArray& dd = dj[j + 1];
        for (std::size_t i = 0; i < npts; ++i) {
            cplx geom{0.0, 0.0};
            for (int s = 0; s < m; ++s) {
                cplx term{1.0, 0.0};
                for (int a = 0; a < s; ++a) term *= hi[i];
                for (int a = 0; a < m - 1 - s; ++a) term *= lo[i];
                geom += term;
            }
            acc[i] += dd[i] * geom;
        }
    }

    const SpectralField rhs =
        lp_project(fft::forward_restricted(padded, acc, g), LpMode::annulus, band);

    const double ref = lhs.l2_norm();
    const double err = l2_distance(lhs, rhs);
    return ref > 0.0 ? err / ref : err;
}

PointwiseReport pointwise_experiment(const SpectralField& u0, const PointwiseConfig& cfg) {
    PointwiseReport rep;
    rep.cutoffs = cfg.cutoffs;
    rep.taus = cfg.taus;
    rep.epsilons = cfg.epsilons;

    const SpaceTimeBlock ref = solve(u0, cfg.solver);

    const MixedNormSpec l4xy_linft = MixedNormSpec::parse("xy:4 t:inf");
    for (int N : cfg.cutoffs) {
        const int j = static_cast<int>(std::lround(std::log2(double(N))));
        if ((1 << j) != N) throw PreconditionViolation("pointwise: cutoffs must be powers of 2");
        SolverConfig scfg = cfg.solver;
        scfg.project_ball = j;
        const SpectralField u0N = lp_project(u0, LpMode::ball, j);
        const SpaceTimeBlock uN = solve(u0N, scfg);
        rep.approx_errors.push_back(
            mixed_norm(block_difference(uN, ref), l4xy_linft, cfg.oversample));
    }

    // Running sup over frames of |u(t) - u0|, snapshotting at each tau.
    std::vector<double> taus_sorted = cfg.taus;
    std::sort(taus_sorted.begin(), taus_sorted.end());
    const fft::PhysicalEval base = fft::evaluate_physical(u0, cfg.oversample);
    std::vector<double> runmax(base.values.size(), 0.0);
    const double cell = base.fine_grid.cell_volume();

    std::map<double, std::vector<double>> measures;
    std::size_t next_tau = 0;
    for (std::size_t fi = 0; fi < ref.size() && next_tau < taus_sorted.size(); ++fi) {
        if (fi > 0) {
            const fft::PhysicalEval ev =
                fft::evaluate_physical(ref.frames[fi] - u0, cfg.oversample);
            for (std::size_t i = 0; i < runmax.size(); ++i) {
                runmax[i] = std::max(runmax[i], std::abs(ev.values[i]));
            }
        }
        const bool last_frame = fi + 1 == ref.size();
        while (next_tau < taus_sorted.size() &&
               (last_frame || ref.times[fi + 1] > taus_sorted[next_tau] + 1e-12)) {
            std::vector<double> row;
            for (double eps : cfg.epsilons) {
                std::size_t count = 0;
                for (double v : runmax) {
                    if (v > eps) ++count;
                }
                row.push_back(static_cast<double>(count) * cell);
            }
            measures[taus_sorted[next_tau]] = std::move(row);
            ++next_tau;
        }
    }
    for (double tau : cfg.taus) rep.exceedance.push_back(measures.at(tau));
    return rep;
}

} // namespace zk
