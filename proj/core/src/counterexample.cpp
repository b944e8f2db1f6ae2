#include "zk/counterexample.hpp"

#include <cmath>

#include "zk/bumps.hpp"
#include "zk/errors.hpp"
#include "zk/littlewood_paley.hpp"
#include "zk/mixed_norm.hpp"
#include "zk/multipliers.hpp"
#include "zk/propagator.hpp"

namespace zk {

namespace {

/// Bump profiles at scale: theta(2^j xi) is nonzero for |xi| in [2^{-j-1}, 2^{-j+2}].
double theta_scaled(int j, double xi) { return annulus_profile(std::ldexp(std::abs(xi), j)); }
double psi_scaled(int k, double eta_mag) { return annulus_profile(std::ldexp(eta_mag, -k)); }

/// Skirt cut tolerated at the Nyquist edge (profile(0.97*4) ~ 6e-8).
constexpr double kSupportCover = 0.97;

} // namespace

PhiFeasibility phi_feasible(const Grid& g, const PhiSpec& spec) {
    PhiFeasibility out;
    if (spec.j < -spec.k) {
        return {false, "j >= -k required (proof regime)"};
    }
    if (g.dim() < 2) return {false, "d >= 2 required"};

    // xi axis: count lattice sites inside the theta support; top under Nyquist.
    const double xi_top = std::ldexp(4.0, -spec.j);
    if (kSupportCover * xi_top > g.max_frequency(0)) {
        return {false, "xi support exceeds axis-0 Nyquist"};
    }
    int xi_sites = 0;
    for (int i = 0; i < g.points(0); ++i) {
        if (theta_scaled(spec.j, g.frequency(0, i)) > 0.0) ++xi_sites;
    }
    if (xi_sites < 8) return {false, "fewer than 8 lattice sites across theta support"};

    const double eta_top = std::ldexp(4.0, spec.k);
    for (int ax = 1; ax < g.dim(); ++ax) {
        if (kSupportCover * eta_top > g.max_frequency(ax)) {
            return {false, "eta annulus exceeds axis Nyquist"};
        }
    }
    // Count eta-lattice sites inside the annulus along a 1-d section per axis;
    // the full (d-1)-dimensional count is at least as large.
    int eta_sites = 0;
    for (int i = 0; i < g.points(1); ++i) {
        if (psi_scaled(spec.k, std::abs(g.frequency(1, i))) > 0.0) ++eta_sites;
    }
    if (eta_sites < 8) return {false, "fewer than 8 lattice sites across psi support"};
    return out;
}

std::vector<int> feasible_neg_k_bands(const Grid& g) {
    std::vector<int> ks;
    for (int k = 0; k <= max_band(g) + 1; ++k) {
        if (phi_feasible(g, {-k, k}).feasible) ks.push_back(k);
    }
    return ks;
}

SpectralField make_phi_jk(const Grid& g, const PhiSpec& spec) {
    const PhiFeasibility feas = phi_feasible(g, spec);
    if (!feas.feasible) {
        throw InfeasibleOnGrid("make_phi_jk(j=" + std::to_string(spec.j) +
                               ", k=" + std::to_string(spec.k) + "): " + feas.limiting);
    }
    SpectralField f(g, "phi_jk");
    CoeffArray& c = f.coeffs();
    for_each_mode(g, [&](std::size_t i, double xi, double eta_sq) {
        const double w = theta_scaled(spec.j, xi) * psi_scaled(spec.k, std::sqrt(eta_sq));
        c[i] = cplx{w, 0.0};
    });
    return f;
}

namespace {

NecessityResult run_necessity(const Grid& g, const NecessityConfig& cfg,
                              const std::vector<PhiSpec>& specs,
                              const std::vector<double>& fit_keys) {
    const MixedNormSpec norm_spec = [&] {
        MixedNormSpec s;
        s.stages = {{{NormAxis::x}, cfg.p}, {{NormAxis::y, NormAxis::t}, kInfExponent}};
        return s;
    }();
    NecessityResult out;
    out.config = cfg;
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const SpectralField phi = make_phi_jk(g, specs[i]);
        const SpaceTimeBlock traj = trajectory(phi, cfg.T, cfg.n_samples);
        const double lhs = mixed_norm(traj, norm_spec, cfg.oversample);
        const double rhs = sobolev_norm(phi, cfg.s_trial);
        const double ratio = lhs / rhs;
        out.ratios.push_back(ratio);
        pts.emplace_back(fit_keys[i], std::log2(ratio));
    }
    out.fit = fit_loglog(std::move(pts));
    return out;
}

} // namespace

NecessityResult necessity_probe(const Grid& g, const NecessityConfig& cfg) {
    if (cfg.k_list.size() < 4) {
        throw PreconditionViolation("necessity_probe: need >= 4 bands for a fit");
    }
    std::vector<PhiSpec> specs;
    std::vector<double> keys;
    for (int k : cfg.k_list) {
        const int j = cfg.j_rule == NecessityConfig::JRule::neg_k ? -k : cfg.j_const;
        specs.push_back({j, k});
        keys.push_back(static_cast<double>(k));
    }
    return run_necessity(g, cfg, specs, keys);
}

NecessityResult necessity_probe_j_sweep(const Grid& g, double p, int k,
                                        const std::vector<int>& j_list, double s_trial,
                                        double T, int n_samples, int oversample) {
    if (j_list.size() < 4) {
        throw PreconditionViolation("necessity_probe_j_sweep: need >= 4 j values");
    }
    NecessityConfig cfg;
    cfg.p = p;
    cfg.s_trial = s_trial;
    cfg.T = T;
    cfg.n_samples = n_samples;
    cfg.oversample = oversample;
    cfg.j_rule = NecessityConfig::JRule::constant;
    std::vector<PhiSpec> specs;
    std::vector<double> keys;
    for (int j : j_list) {
        specs.push_back({j, k});
        keys.push_back(static_cast<double>(j));
        cfg.k_list.push_back(k);
    }
    return run_necessity(g, cfg, specs, keys);
}

Rational threshold_calc(const ThresholdQuery& q) {
    if (q.d < 2) throw PreconditionViolation("threshold_calc: d >= 2 required");
    if (q.p < Rational{1}) throw PreconditionViolation("threshold_calc: p >= 1 required");
    const Rational half{1, 2};
    const Rational inv_p = Rational{1} / q.p;
    const Rational d{q.d};
    switch (q.kind) {
        case ThresholdQuery::Kind::spacetime_necessary:
            if (q.p < Rational{2}) {
                throw ExponentConstraintViolated(
                    "spacetime maximal estimate requires p >= 2; no threshold exists");
            }
            return d * half - inv_p;
        case ThresholdQuery::Kind::timeonly_necessary: {
            if (q.p < Rational{2}) {
                throw ExponentConstraintViolated(
                    "time-only maximal estimate requires p >= 2; no threshold exists");
            }
            const Rational a = d * (half - inv_p);
            const Rational b = Rational{3, 2} * inv_p - d * half * (half - inv_p);
            return rational_max(a, b);
        }
        case ThresholdQuery::Kind::sjolin:
            return d * Rational{1, 4} - Rational{q.d - 1} * half * inv_p;
        case ThresholdQuery::Kind::rogers:
            return Rational{q.m} * q.s0 - Rational{q.m - 1} * d * (half - inv_p);
    }
    throw UnsupportedKind("threshold_calc: unknown kind");
}

} // namespace zk
