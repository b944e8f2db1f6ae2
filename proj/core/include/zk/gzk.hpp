#ifndef ZK_GZK_HPP
#define ZK_GZK_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "zk/field.hpp"
#include "zk/mixed_norm.hpp"
#include "zk/propagator.hpp"

namespace zk {

/** Nonlinear evolution d_t u + d_x Lap u + d_x(u^{k+1}) = 0 on the periodic
 * box.  The linear flow is applied exactly per coefficient; only the
 * nonlinear term is stepped (integrating-factor classical RK4). */
struct SolverConfig {
    int k_power = 1;          ///< nonlinearity u^{k_power+1}
    double s = 1.0;           ///< regularity used by the composite norms
    double T = 1.0;
    double dt = 1e-2;         ///< cap on the step; actual step divides the sample spacing
    enum class Dealiasing { full_padding, two_thirds } dealiasing = Dealiasing::full_padding;
    enum class Mode { stepper, picard } mode = Mode::stepper;
    int picard_max_iter = 12;
    int n_samples = 33;
    double nonlinear_scale = 1.0; ///< 0 switches the nonlinearity off (linear limit)
    double c_stab = 1.0;          ///< dt <= c_stab / (max|u| zeta_max)
    int project_ball = -1;        ///< >= 0: apply P_j to the nonlinearity (truncated flow)
    double eps = 0.01;
    double s0 = 0.75;
    int oversample = 2;
};

struct SolveInfo {
    double dt_effective = 0.0;
    int steps = 0;
    double mass_drift = 0.0;        ///< max relative drift of int u^2 over the run
    double hamiltonian_drift = 0.0; ///< relative drift of the energy functional
    double residual_aliasing = 0.0; ///< two_thirds only: first-step defect vs full padding
};

SpaceTimeBlock solve(const SpectralField& u0, const SolverConfig& cfg, SolveInfo* info = nullptr);

/** Duhamel operator: Gamma(u)(t) = U(t) u0 + int_0^t U(t-t') N(u)(t') dt'
 * with N the solver's nonlinear term and the trapezoid rule on the
 * trajectory samples; U applied exactly. */
SpaceTimeBlock duhamel_apply(const SpaceTimeBlock& traj, const SpectralField& u0,
                             const SolverConfig& cfg);

struct PicardTrace {
    std::vector<double> diffs;       ///< X^s distances between successive iterates
    double contraction_factor = 0.0; ///< fitted geometric ratio of the diffs
    bool converged = false;
};

/** Picard iteration u^{n+1} = Gamma(u^n) from the free trajectory; stops when
 * the X^s_T distance drops below 1e-8 of the free trajectory's norm.  Throws
 * NoContraction when the diffs fail to decrease three times in a row. */
std::pair<SpaceTimeBlock, PicardTrace> picard_solve(const SpectralField& u0,
                                                    const SolverConfig& cfg);

/** Exact telescoping identity for Delta_k(u^{k_power+1}): both sides computed
 * on the grid with dealiased products; returns the relative L2 error. */
double paraproduct_check(const SpectralField& u, int k_power, int band);

/// int u^2 (the conserved mass of the flow).
double mass(const SpectralField& u);
/// int (|grad u|^2 / 2 - u^{k+2}/(k+2)) (the conserved energy).
double hamiltonian(const SpectralField& u, int k_power);

struct PointwiseConfig {
    SolverConfig solver;
    std::vector<int> cutoffs;      ///< low-pass cutoffs N (powers of two)
    std::vector<double> epsilons;  ///< increasing thresholds
    std::vector<double> taus;      ///< decreasing time windows within [0, T]
    int oversample = 1;
};

struct PointwiseReport {
    std::vector<int> cutoffs;
    std::vector<double> approx_errors; ///< |u_N - u| in L^4_{x,y} L^inf_T per cutoff
    std::vector<double> taus;
    std::vector<double> epsilons;
    std::vector<std::vector<double>> exceedance; ///< [tau][eps] measure of the bad set
};

/** Truncated-data convergence experiment: solves the P_N-projected flows,
 * reports the maximal-norm approximation errors and the Chebyshev exceedance
 * measures m{z : sup_{t <= tau} |u(z,t) - u0(z)| > eps}. */
PointwiseReport pointwise_experiment(const SpectralField& u0, const PointwiseConfig& cfg);

} // namespace zk

#endif
