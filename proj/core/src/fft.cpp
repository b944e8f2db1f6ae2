#include "zk/fft.hpp"

#include <fftw3.h>

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "zk/errors.hpp"

namespace zk::fft {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::mutex plan_mutex;
std::map<std::pair<std::vector<int>, int>, fftw_plan> plan_cache;

fftw_plan get_plan(const std::vector<int>& shape, int sign) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_pair(shape, sign);
    auto it = plan_cache.find(key);
    if (it != plan_cache.end()) return it->second;

    std::size_t n = 1;
    for (int s : shape) n *= static_cast<std::size_t>(s);
    CoeffArray scratch(n);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft(static_cast<int>(shape.size()), shape.data(), buf, buf,
                                   sign, FFTW_ESTIMATE);
    plan_cache.emplace(std::move(key), plan);
    return plan;
}

/// Unnormalized in-place DFT; sign = FFTW_FORWARD or FFTW_BACKWARD.
void raw_dft(const std::vector<int>& shape, cplx* data, int sign) {
    fftw_plan plan = get_plan(shape, sign);
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plan, buf, buf);
}

double forward_scale(const Grid& g) {
    double s = std::pow(kTwoPi, -0.5 * g.dim());
    for (int ax = 0; ax < g.dim(); ++ax) s *= g.spacing(ax);
    return s;
}

double inverse_scale(const Grid& g) {
    double s = std::pow(kTwoPi, -0.5 * g.dim());
    for (int ax = 0; ax < g.dim(); ++ax) s *= g.freq_step(ax);
    return s;
}

std::atomic<std::size_t> g_eval_cap{std::size_t{1} << 27};

} // namespace

SpectralField forward(const Grid& g, const CoeffArray& physical, std::string tag) {
    if (physical.size() != g.size()) throw DimensionMismatch("fft::forward: sample count");
    CoeffArray data = physical;
    raw_dft(g.resolution(), data.data(), FFTW_FORWARD);
    const double s = forward_scale(g);
    for (cplx& c : data) c *= s;
    return SpectralField(g, std::move(data), std::move(tag));
}

CoeffArray inverse(const SpectralField& f) {
    CoeffArray data = f.coeffs();
    raw_dft(f.grid().resolution(), data.data(), FFTW_BACKWARD);
    const double s = inverse_scale(f.grid());
    for (cplx& c : data) c *= s;
    return data;
}

void set_eval_cap(std::size_t max_entries) { g_eval_cap.store(max_entries); }
std::size_t eval_cap() { return g_eval_cap.load(); }

SpectralField embed(const SpectralField& f, const std::vector<int>& fine_resolution) {
    const Grid& g = f.grid();
    if (static_cast<int>(fine_resolution.size()) != g.dim()) {
        throw DimensionMismatch("fft::embed: resolution arity");
    }
    Grid fine(g.lengths(), fine_resolution);
    SpectralField out(fine, f.tag());
    for_each_site(g, [&](std::size_t flat, const std::vector<int>& idx) {
        std::size_t fine_flat = 0;
        for (int ax = 0; ax < g.dim(); ++ax) {
            const int m = g.signed_index(ax, idx[ax]);
            const int nf = fine.points(ax);
            const int i = m < 0 ? m + nf : m;
            fine_flat = fine_flat * static_cast<std::size_t>(nf) + static_cast<std::size_t>(i);
        }
        out[fine_flat] = f[flat];
    });
    return out;
}

SpectralField restrict_to(const SpectralField& f, const Grid& coarse) {
    const Grid& g = f.grid();
    if (coarse.dim() != g.dim()) throw DimensionMismatch("fft::restrict_to: dim");
    SpectralField out(coarse, f.tag());
    for_each_site(coarse, [&](std::size_t flat, const std::vector<int>& idx) {
        std::size_t src = 0;
        for (int ax = 0; ax < g.dim(); ++ax) {
            const int m = coarse.signed_index(ax, idx[ax]);
            const int ng = g.points(ax);
            const int i = m < 0 ? m + ng : m;
            src = src * static_cast<std::size_t>(ng) + static_cast<std::size_t>(i);
        }
        out[flat] = f[src];
    });
    return out;
}

PhysicalEval evaluate_physical(const SpectralField& f, int oversample) {
    if (oversample != 1 && oversample != 2 && oversample != 4 && oversample != 8) {
        throw ResolutionOverflow("evaluate_physical: oversample must be 1, 2, 4 or 8");
    }
    const Grid& g = f.grid();
    std::vector<int> fine_res(g.resolution());
    std::size_t total = 1;
    for (int& r : fine_res) {
        r *= oversample;
        total *= static_cast<std::size_t>(r);
    }
    if (total > eval_cap()) {
        throw ResolutionOverflow("evaluate_physical: padded size " + std::to_string(total) +
                                 " exceeds cap " + std::to_string(eval_cap()));
    }
    if (oversample == 1) {
        return PhysicalEval{g, inverse(f)};
    }
    SpectralField padded = embed(f, fine_res);
    Grid fine = padded.grid();
    return PhysicalEval{fine, inverse(padded)};
}

CoeffArray padded_samples(const SpectralField& f, const Grid& padded) {
    if (padded == f.grid()) return inverse(f);
    return inverse(embed(f, padded.resolution()));
}

SpectralField forward_restricted(const Grid& padded, const CoeffArray& samples, const Grid& base) {
    SpectralField big = forward(padded, samples);
    if (padded == base) return big;
    return restrict_to(big, base);
}

Grid padded_grid(const Grid& base, double pad_factor) {
    if (pad_factor < 1.0) throw DealiasingOverflow("padded_grid: pad_factor < 1");
    std::vector<int> res(base.resolution());
    std::size_t total = 1;
    for (int& r : res) {
        int m = static_cast<int>(std::ceil(pad_factor * r));
        if (m % 2 != 0) ++m;
        r = m;
        total *= static_cast<std::size_t>(m);
    }
    if (total > eval_cap()) {
        throw DealiasingOverflow("padded_grid: padded size exceeds eval cap");
    }
    return Grid(base.lengths(), res);
}

SpectralField pointwise_power(const SpectralField& f, int power, double pad_factor,
                              bool take_real) {
    if (power < 1) throw DealiasingOverflow("pointwise_power: power must be >= 1");
    const Grid& base = f.grid();
    Grid padded = padded_grid(base, pad_factor);
    CoeffArray vals = padded_samples(f, padded);
    if (take_real) {
        for (cplx& v : vals) v = cplx{v.real(), 0.0};
    }
    for (cplx& v : vals) {
        cplx p = v;
        for (int i = 1; i < power; ++i) p *= v;
        v = p;
    }
    return forward_restricted(padded, vals, base);
}

} // namespace zk::fft
