#include "zk/mixed_norm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "zk/errors.hpp"
#include "zk/fft.hpp"
#include "zk/littlewood_paley.hpp"
#include "zk/multipliers.hpp"

namespace zk {

namespace {

double pow_p(double v, double p) {
    if (p == 1.0) return v;
    if (p == 2.0) return v * v;
    if (p == 3.0) return v * v * v;
    if (p == 4.0) {
        const double s = v * v;
        return s * s;
    }
    return std::pow(v, p);
}

struct Tensor {
    std::vector<int> dims;
    std::vector<double> data;
};

std::vector<std::size_t> strides_of(const std::vector<int>& dims) {
    std::vector<std::size_t> st(dims.size());
    std::size_t s = 1;
    for (int ax = static_cast<int>(dims.size()) - 1; ax >= 0; --ax) {
        st[ax] = s;
        s *= static_cast<std::size_t>(dims[ax]);
    }
    return st;
}

/** Reduce over `axes`: finite p accumulates weight * v^p (left open for the
 * caller to close with ^{1/p}); p = inf takes the max.  Reduced axes keep
 * dimension 1 so indexing stays uniform. */
Tensor reduce_axes(const Tensor& in, const std::vector<int>& axes, double p, double weight) {
    Tensor out;
    out.dims = in.dims;
    std::vector<bool> reduced(in.dims.size(), false);
    for (int ax : axes) {
        reduced[ax] = true;
        out.dims[ax] = 1;
    }
    std::size_t out_size = 1;
    for (int d : out.dims) out_size *= static_cast<std::size_t>(d);
    const bool is_inf = std::isinf(p);
    out.data.assign(out_size, 0.0);

    const auto out_strides = strides_of(out.dims);
    std::vector<int> idx(in.dims.size(), 0);
    const std::size_t n = in.data.size();
    for (std::size_t flat = 0; flat < n; ++flat) {
        std::size_t of = 0;
        for (std::size_t ax = 0; ax < in.dims.size(); ++ax) {
            if (!reduced[ax]) of += static_cast<std::size_t>(idx[ax]) * out_strides[ax];
        }
        const double v = in.data[flat];
        if (is_inf) {
            if (v > out.data[of]) out.data[of] = v;
        } else {
            out.data[of] += pow_p(v, p);
        }
        for (int ax = static_cast<int>(in.dims.size()) - 1; ax >= 0; --ax) {
            if (++idx[ax] < in.dims[ax]) break;
            idx[ax] = 0;
        }
    }
    if (!is_inf && weight != 1.0) {
        for (double& v : out.data) v *= weight;
    }
    return out;
}

void close_power(Tensor& t, double p) {
    if (std::isinf(p) || p == 1.0) return;
    const double inv = 1.0 / p;
    for (double& v : t.data) v = std::pow(v, inv);
}

std::vector<int> stage_space_axes(const NormStage& st, int d) {
    std::vector<int> out;
    for (NormAxis a : st.axes) {
        if (a == NormAxis::x) {
            out.push_back(0);
        } else if (a == NormAxis::y) {
            for (int ax = 1; ax < d; ++ax) out.push_back(ax);
        }
    }
    return out;
}

bool stage_has_t(const NormStage& st) {
    return std::find(st.axes.begin(), st.axes.end(), NormAxis::t) != st.axes.end();
}

std::vector<double> time_weights(const std::vector<double>& times, bool probability) {
    const std::size_t n = times.size();
    std::vector<double> w(n, 1.0);
    if (n >= 2) {
        for (std::size_t i = 0; i < n; ++i) {
            const double lo = i == 0 ? times[0] : times[i - 1];
            const double hi = i + 1 == n ? times[n - 1] : times[i + 1];
            w[i] = 0.5 * (hi - lo);
        }
        if (probability) {
            const double total = times.back() - times.front();
            if (total > 0.0) {
                for (double& v : w) v /= total;
            }
        }
    }
    return w;
}

} // namespace

void MixedNormSpec::validate() const {
    if (stages.empty()) throw Error("mixed_norm: empty stage list");
    int seen_x = 0, seen_y = 0, seen_t = 0;
    for (const NormStage& st : stages) {
        if (st.axes.empty()) throw Error("mixed_norm: stage with no axes");
        if (!(st.exponent >= 1.0)) throw Error("mixed_norm: exponent must be >= 1");
        for (NormAxis a : st.axes) {
            if (a == NormAxis::x) ++seen_x;
            if (a == NormAxis::y) ++seen_y;
            if (a == NormAxis::t) ++seen_t;
        }
    }
    if (seen_x != 1 || seen_y != 1 || seen_t != 1) {
        throw Error("mixed_norm: stages must partition {x, y, t}");
    }
}

std::string MixedNormSpec::describe() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < stages.size(); ++i) {
        if (i) os << ' ';
        for (NormAxis a : stages[i].axes) {
            os << (a == NormAxis::x ? 'x' : a == NormAxis::y ? 'y' : 't');
        }
        os << ':';
        if (std::isinf(stages[i].exponent)) {
            os << "inf";
        } else {
            os << stages[i].exponent;
        }
    }
    return os.str();
}

MixedNormSpec MixedNormSpec::parse(const std::string& text) {
    MixedNormSpec spec;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos) throw Error("mixed_norm parse: missing ':' in " + tok);
        NormStage st;
        for (char c : tok.substr(0, colon)) {
            if (c == 'x') {
                st.axes.push_back(NormAxis::x);
            } else if (c == 'y') {
                st.axes.push_back(NormAxis::y);
            } else if (c == 't') {
                st.axes.push_back(NormAxis::t);
            } else {
                throw Error("mixed_norm parse: bad axis letter in " + tok);
            }
        }
        const std::string ex = tok.substr(colon + 1);
        st.exponent = ex == "inf" ? kInfExponent : std::stod(ex);
        spec.stages.push_back(std::move(st));
    }
    spec.validate();
    return spec;
}

double mixed_norm(const SpaceTimeBlock& block, const MixedNormSpec& spec, int oversample,
                  bool probability) {
    if (block.empty()) throw EmptyBlock("mixed_norm: empty block");
    spec.validate();
    const Grid& g = block.grid();
    const int d = g.dim();

    std::size_t t_stage = spec.stages.size();
    for (std::size_t i = 0; i < spec.stages.size(); ++i) {
        if (stage_has_t(spec.stages[i])) t_stage = i;
    }

    const std::vector<double> tw = time_weights(block.times, probability);
    const double t_expo = spec.stages[t_stage].exponent;
    const std::vector<int> t_space = stage_space_axes(spec.stages[t_stage], d);

    Tensor acc;
    bool acc_ready = false;

    for (std::size_t fi = 0; fi < block.size(); ++fi) {
        const fft::PhysicalEval ev = fft::evaluate_physical(block.frames[fi], oversample);
        const Grid& fine = ev.fine_grid;

        // Per-axis quadrature weight of one fine-lattice sample.
        auto axis_weight = [&](const std::vector<int>& axes) {
            double w = 1.0;
            for (int ax : axes) {
                w *= probability ? 1.0 / fine.points(ax) : fine.spacing(ax);
            }
            return w;
        };

        Tensor vals;
        vals.dims = fine.resolution();
        vals.data.resize(ev.values.size());
        for (std::size_t i = 0; i < ev.values.size(); ++i) vals.data[i] = std::abs(ev.values[i]);

        // Stages inside the time group act frame by frame, innermost first.
        for (std::size_t si = spec.stages.size(); si-- > t_stage + 1;) {
            const NormStage& st = spec.stages[si];
            const auto axes = stage_space_axes(st, d);
            vals = reduce_axes(vals, axes, st.exponent, axis_weight(axes));
            close_power(vals, st.exponent);
        }

        // Fold this frame into the time-stage accumulator.
        Tensor part = reduce_axes(vals, t_space, t_expo, axis_weight(t_space));
        if (!acc_ready) {
            acc = std::move(part);
            if (std::isinf(t_expo)) {
                // already the running max
            } else {
                for (double& v : acc.data) v *= tw[fi];
            }
            acc_ready = true;
        } else {
            if (std::isinf(t_expo)) {
                for (std::size_t i = 0; i < acc.data.size(); ++i) {
                    acc.data[i] = std::max(acc.data[i], part.data[i]);
                }
            } else {
                for (std::size_t i = 0; i < acc.data.size(); ++i) {
                    acc.data[i] += tw[fi] * part.data[i];
                }
            }
        }
    }
    close_power(acc, t_expo);

    // Outer stages on the time-closed tensor.
    std::vector<int> fine_res = g.resolution();
    for (int& r : fine_res) r *= oversample;
    const Grid fine_ref(g.lengths(), fine_res);
    for (std::size_t si = t_stage; si-- > 0;) {
        const NormStage& st = spec.stages[si];
        const auto axes = stage_space_axes(st, d);
        double w = 1.0;
        for (int ax : axes) {
            w *= probability ? 1.0 / fine_ref.points(ax) : fine_ref.spacing(ax);
        }
        acc = reduce_axes(acc, axes, st.exponent, w);
        close_power(acc, st.exponent);
    }

    double result = 0.0;
    for (double v : acc.data) result = std::max(result, v);
    return result;
}

namespace {

SpaceTimeBlock map_frames(const SpaceTimeBlock& block,
                          const std::function<SpectralField(const SpectralField&)>& fn) {
    SpaceTimeBlock out;
    out.times = block.times;
    out.frames.reserve(block.size());
    for (const SpectralField& f : block.frames) out.frames.push_back(fn(f));
    return out;
}

} // namespace

double ys_norm(const SpaceTimeBlock& block, const YsConfig& cfg) {
    if (block.empty()) throw EmptyBlock("ys_norm: empty block");
    const int d = block.grid().dim();
    const int os = cfg.oversample;

    double sup_sobolev = 0.0;
    const double sob_index = cfg.variant == YsVariant::tilde3 ? 0.0 : cfg.s;
    for (const SpectralField& f : block.frames) {
        sup_sobolev = std::max(sup_sobolev, sobolev_norm(f, sob_index));
    }

    const MixedNormSpec smoothing = MixedNormSpec::parse("x:inf yt:2");
    const double smooth_term =
        mixed_norm(map_frames(block, [&](const SpectralField& f) {
                       return bessel_potential(f, cfg.s + 1.0);
                   }),
                   smoothing, os);

    double maximal_order = 0.0;
    MixedNormSpec maximal;
    switch (cfg.variant) {
        case YsVariant::two_d:
            maximal_order = cfg.s - cfg.s0 - cfg.eps;
            maximal = MixedNormSpec::parse("x:2 yt:inf");
            break;
        case YsVariant::high_d:
            maximal_order = cfg.s - (0.5 * d - 0.25) - cfg.eps;
            maximal = MixedNormSpec::parse("x:4 yt:inf");
            break;
        case YsVariant::tilde3:
            maximal_order = cfg.s - 1.0 - cfg.eps;
            maximal = MixedNormSpec::parse("x:2 yt:inf");
            break;
    }
    const double maximal_term =
        mixed_norm(map_frames(block, [&](const SpectralField& f) {
                       return bessel_potential(f, maximal_order);
                   }),
                   maximal, os);

    return sup_sobolev + smooth_term + maximal_term;
}

CompositeNormReport xs_norm(const SpaceTimeBlock& block, const YsConfig& cfg) {
    if (block.empty()) throw EmptyBlock("xs_norm: empty block");
    const Grid& g = block.grid();
    const int jmax = max_band(g);

    CompositeNormReport rep;
    double total_sq = 0.0;
    for (int j = 0; j <= jmax; ++j) {
        std::vector<double> w = lp_band_weights(g, j);
        if (j == 0) {
            // Band 0 carries the low block so the bands partition the identity.
            const std::vector<double> low = lp_band_weights(g, -1);
            for (std::size_t i = 0; i < w.size(); ++i) w[i] += low[i];
        }
        SpaceTimeBlock banded;
        banded.times = block.times;
        banded.frames.reserve(block.size());
        double band_mass = 0.0;
        for (const SpectralField& f : block.frames) {
            banded.frames.push_back(apply_weights(f, w));
            band_mass += banded.frames.back().l2_norm();
        }
        double yb = 0.0;
        if (band_mass > 0.0) yb = ys_norm(banded, cfg);
        rep.per_band[j] = yb;
        const double weighted = yb * std::exp2(cfg.s * j);
        total_sq += weighted * weighted;
    }
    rep.total = std::sqrt(total_sq);
    return rep;
}

double xs_distance(const SpaceTimeBlock& a, const SpaceTimeBlock& b, const YsConfig& cfg) {
    return xs_norm(block_difference(a, b), cfg).total;
}

} // namespace zk
