#include "zk/synthesize.hpp"

#include <cmath>
#include <sstream>

#include "zk/bumps.hpp"
#include "zk/errors.hpp"
#include "zk/fft.hpp"
#include "zk/littlewood_paley.hpp"
#include "zk/multipliers.hpp"
#include "zk/rng.hpp"

namespace zk {

namespace {

SpectralField make_gaussian(const Grid& g, double sigma, double amplitude) {
    CoeffArray vals(g.size());
    const int d = g.dim();
    std::vector<double> center(d);
    for (int ax = 0; ax < d; ++ax) center[ax] = 0.5 * g.length(ax);
    const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
    for_each_site(g, [&](std::size_t flat, const std::vector<int>& idx) {
        double r2 = 0.0;
        for (int ax = 0; ax < d; ++ax) {
            const double x = idx[ax] * g.spacing(ax) - center[ax];
            r2 += x * x;
        }
        vals[flat] = cplx{amplitude * std::exp(-r2 * inv2s2), 0.0};
    });
    return fft::forward(g, vals, "gaussian");
}

SpectralField make_single_mode(const Grid& g, const std::vector<int>& mode, double amplitude) {
    SpectralField f(g, "single_mode");
    const std::size_t i = flat_index(g, mode);
    f[i] = cplx{amplitude / std::sqrt(g.freq_cell_volume()), 0.0};
    return f;
}

SpectralField make_random_band(const Grid& g, int band, std::uint64_t seed, double amplitude) {
    SpectralField f(g, "random_band");
    const std::vector<double> w = lp_band_weights(g, band);
    Rng rng(mix_seed(seed, 0x5a4b));
    // Fixed row-major draw order keeps the stream deterministic.
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] > 0.0) f[i] = w[i] * rng.cgauss();
    }
    f.hermitian_symmetrize();
    const double n = f.l2_norm();
    if (n > 0.0) f *= amplitude / n;
    return f;
}

SpectralField make_rough(const Grid& g, double s, double delta, std::uint64_t seed,
                         double amplitude) {
    SpectralField f(g, "rough");
    Rng rng(mix_seed(seed, 0x52f));
    const double expo = -(s + 0.5 * g.dim() + delta);
    CoeffArray& c = f.coeffs();
    for_each_mode(g, [&](std::size_t i, double xi, double eta_sq) {
        const double w = std::pow(1.0 + xi * xi + eta_sq, 0.5 * expo);
        c[i] = w * rng.cgauss();
    });
    f.hermitian_symmetrize();
    const double n = sobolev_norm(f, s);
    if (n > 0.0) f *= amplitude / n;
    return f;
}

} // namespace

std::string GeneratorSpec::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::zero: return "zero";
        case Kind::gaussian:
            os << "gaussian:sigma=" << sigma << ",amp=" << amplitude;
            break;
        case Kind::single_mode:
            os << "single_mode:m=";
            for (std::size_t i = 0; i < mode.size(); ++i) os << (i ? ";" : "") << mode[i];
            os << ",amp=" << amplitude;
            break;
        case Kind::random_band:
            os << "random_band:k=" << band << ",seed=" << seed << ",amp=" << amplitude;
            break;
        case Kind::rough:
            os << "rough:s=" << s << ",delta=" << delta << ",seed=" << seed
               << ",amp=" << amplitude;
            break;
    }
    return os.str();
}

SpectralField synthesize(const Grid& g, const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorSpec::Kind::zero:
            return SpectralField(g, "zero");
        case GeneratorSpec::Kind::gaussian:
            return make_gaussian(g, spec.sigma, spec.amplitude);
        case GeneratorSpec::Kind::single_mode:
            return make_single_mode(g, spec.mode, spec.amplitude);
        case GeneratorSpec::Kind::random_band:
            return make_random_band(g, spec.band, spec.seed, spec.amplitude);
        case GeneratorSpec::Kind::rough:
            return make_rough(g, spec.s, spec.delta, spec.seed, spec.amplitude);
    }
    throw UnknownGenerator("synthesize: unhandled generator kind");
}

namespace {

double parse_num(const std::string& v) { return std::stod(v); }

} // namespace

GeneratorSpec parse_generator(const std::string& text) {
    GeneratorSpec spec;
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    if (name == "zero") {
        spec.kind = GeneratorSpec::Kind::zero;
    } else if (name == "gaussian") {
        spec.kind = GeneratorSpec::Kind::gaussian;
    } else if (name == "single_mode") {
        spec.kind = GeneratorSpec::Kind::single_mode;
    } else if (name == "random_band") {
        spec.kind = GeneratorSpec::Kind::random_band;
    } else if (name == "rough") {
        spec.kind = GeneratorSpec::Kind::rough;
    } else {
        throw UnknownGenerator("unknown generator '" + name + "'");
    }
    if (colon == std::string::npos) return spec;

    std::stringstream args(text.substr(colon + 1));
    std::string kv;
    while (std::getline(args, kv, ',')) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw UnknownGenerator("bad generator arg '" + kv + "'");
        const std::string key = kv.substr(0, eq);
        const std::string val = kv.substr(eq + 1);
        if (key == "sigma") {
            spec.sigma = parse_num(val);
        } else if (key == "amp") {
            spec.amplitude = parse_num(val);
        } else if (key == "k") {
            spec.band = static_cast<int>(parse_num(val));
        } else if (key == "seed") {
            spec.seed = static_cast<std::uint64_t>(std::stoull(val));
        } else if (key == "s") {
            spec.s = parse_num(val);
        } else if (key == "delta") {
            spec.delta = parse_num(val);
        } else if (key == "m") {
            spec.mode.clear();
            std::stringstream ms(val);
            std::string tok;
            while (std::getline(ms, tok, ';')) spec.mode.push_back(std::stoi(tok));
        } else {
            throw UnknownGenerator("unknown generator key '" + key + "'");
        }
    }
    return spec;
}

} // namespace zk
