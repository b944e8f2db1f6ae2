#ifndef ZK_COUNTEREXAMPLE_HPP
#define ZK_COUNTEREXAMPLE_HPP

#include <string>
#include <vector>

#include "zk/field.hpp"
#include "zk/grid.hpp"
#include "zk/rational.hpp"
#include "zk/scaling_fit.hpp"

namespace zk {

/** The counterexample family: hat{phi}_{j,k}(xi, eta) = theta(2^j xi) psi(2^{-k} eta)
 * with theta the symmetric two-sided bump (support +-[1/2, 4], plateau
 * +-[1, 2]) and psi its radial (d-1)-dimensional counterpart. */
struct PhiSpec {
    int j = 0;
    int k = 0;
};

struct PhiFeasibility {
    bool feasible = true;
    std::string limiting; ///< name of the violated constraint when infeasible
};

/** Grid feasibility: >= 8 lattice sites across each bump's support and the
 * support top under the axis Nyquist (up to the negligible outer skirt where
 * the bump is below 1e-7). */
PhiFeasibility phi_feasible(const Grid& g, const PhiSpec& spec);

/// All feasible (j = -k) band indices on the grid, in increasing k.
std::vector<int> feasible_neg_k_bands(const Grid& g);

SpectralField make_phi_jk(const Grid& g, const PhiSpec& spec);

struct NecessityConfig {
    double p = 4.0;
    std::vector<int> k_list;
    enum class JRule { neg_k, constant } j_rule = JRule::neg_k;
    int j_const = 0;
    double s_trial = 0.0;
    double T = 1.0;
    int n_samples = 33;
    int oversample = 2;
};

struct NecessityResult {
    ScalingFitReport fit;            ///< log2 R against k
    std::vector<double> ratios;      ///< R(k) per k in k_list order
    NecessityConfig config;
};

/** R(k) = |U(t) phi_{j,k}|_{L^p_x L^inf_{y,t in [0,T]}} / |phi_{j,k}|_{H^{s_trial}};
 * the fitted slope of log2 R against k approaches d/2 - 1/p - s_trial under
 * the worst-case rule j = -k. */
NecessityResult necessity_probe(const Grid& g, const NecessityConfig& cfg);

/** Companion sweep in j at fixed k: slope of log2 R against j approaches
 * 1/p - 1/2 for p > 2. */
NecessityResult necessity_probe_j_sweep(const Grid& g, double p, int k,
                                        const std::vector<int>& j_list, double s_trial,
                                        double T = 1.0, int n_samples = 33, int oversample = 2);

struct ThresholdQuery {
    enum class Kind { spacetime_necessary, timeonly_necessary, sjolin, rogers };
    Kind kind = Kind::spacetime_necessary;
    int d = 2;
    Rational p{2};
    Rational s0{0};  ///< rogers: local regularity threshold
    int m = 3;       ///< rogers: symbol growth order
};

/** Closed-form necessity/sharpness thresholds, exact rational arithmetic:
 *  spacetime_necessary: d/2 - 1/p
 *  timeonly_necessary : max(d(1/2 - 1/p), 3/(2p) - (d/2)(1/2 - 1/p))
 *  sjolin             : d/4 - (d-1)/(2p)
 *  rogers             : m s0 - (m-1) d (1/2 - 1/p)
 */
Rational threshold_calc(const ThresholdQuery& q);

} // namespace zk

#endif
