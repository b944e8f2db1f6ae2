#include "zk/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "zk/errors.hpp"

namespace zk::report {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_header() { return "experiment,d,p,q,r,s,k_power,band,j,k,seed,value,kind"; }

namespace {

template <class T, class Fmt>
void append_opt(std::string& line, const std::optional<T>& v, Fmt&& fmt) {
    line += ',';
    if (v) line += fmt(*v);
}

} // namespace

std::string to_csv(const std::vector<CsvRow>& rows) {
    std::string out = csv_header();
    out += '\n';
    for (const CsvRow& r : rows) {
        std::string line = r.experiment;
        auto as_int = [](auto v) { return std::to_string(v); };
        append_opt(line, r.d, as_int);
        append_opt(line, r.p, fmt_double);
        append_opt(line, r.q, fmt_double);
        append_opt(line, r.r, fmt_double);
        append_opt(line, r.s, fmt_double);
        append_opt(line, r.k_power, as_int);
        append_opt(line, r.band, as_int);
        append_opt(line, r.j, as_int);
        append_opt(line, r.k, as_int);
        append_opt(line, r.seed, as_int);
        append_opt(line, r.value, fmt_double);
        line += ',';
        line += r.kind;
        out += line;
        out += '\n';
    }
    return out;
}

std::string svg_scatter(const ScalingFitReport& fit, const std::string& xlabel,
                        const std::string& ylabel, const std::string& title) {
    const int W = 640, H = 480, ml = 70, mr = 20, mt = 40, mb = 50;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& [x, y] : fit.points) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    if (xmax <= xmin) xmax = xmin + 1.0;
    if (ymax <= ymin) ymax = ymin + 1.0;
    const double xpad = 0.06 * (xmax - xmin), ypad = 0.1 * (ymax - ymin);
    xmin -= xpad;
    xmax += xpad;
    ymin -= ypad;
    ymax += ypad;
    auto X = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
    auto Y = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };

    std::ostringstream os;
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n";
    os << "<rect width='" << W << "' height='" << H << "' fill='white'/>\n";
    os << "<text x='" << W / 2 << "' y='24' text-anchor='middle' font-size='15'>" << title
       << "</text>\n";
    // axes
    os << "<line x1='" << ml << "' y1='" << H - mb << "' x2='" << W - mr << "' y2='" << H - mb
       << "' stroke='black'/>\n";
    os << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='" << H - mb
       << "' stroke='black'/>\n";
    os << "<text x='" << (ml + W - mr) / 2 << "' y='" << H - 12
       << "' text-anchor='middle' font-size='13'>" << xlabel << "</text>\n";
    os << "<text x='18' y='" << (mt + H - mb) / 2 << "' text-anchor='middle' font-size='13' "
       << "transform='rotate(-90 18 " << (mt + H - mb) / 2 << ")'>" << ylabel << "</text>\n";
    // ticks
    for (int i = 0; i <= 4; ++i) {
        const double tx = xmin + (xmax - xmin) * i / 4, ty = ymin + (ymax - ymin) * i / 4;
        os << "<text x='" << X(tx) << "' y='" << H - mb + 18
           << "' text-anchor='middle' font-size='11'>" << fmt_double(std::round(tx * 100) / 100)
           << "</text>\n";
        os << "<text x='" << ml - 8 << "' y='" << Y(ty) + 4
           << "' text-anchor='end' font-size='11'>" << fmt_double(std::round(ty * 100) / 100)
           << "</text>\n";
    }
    // fitted line
    os << "<line x1='" << X(xmin) << "' y1='" << Y(fit.intercept + fit.slope * xmin) << "' x2='"
       << X(xmax) << "' y2='" << Y(fit.intercept + fit.slope * xmax)
       << "' stroke='#c22' stroke-width='1.5'/>\n";
    for (const auto& [x, y] : fit.points) {
        os << "<circle cx='" << X(x) << "' cy='" << Y(y) << "' r='4' fill='#236'/>\n";
    }
    os << "<text x='" << W - mr - 6 << "' y='" << mt + 14
       << "' text-anchor='end' font-size='12'>slope " << fmt_double(fit.slope) << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw IoError("failed writing " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit_experiment(const std::filesystem::path& dir, const std::string& config_json,
                     const std::vector<CsvRow>& rows, const std::string& results_json,
                     const std::string& summary, const ScalingFitReport* fit,
                     const std::string& xlabel, const std::string& ylabel) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
    write_text_file(dir / "resolved-config.json", config_json);
    write_text_file(dir / "results.csv", to_csv(rows));
    write_text_file(dir / "results.json", results_json);
    write_text_file(dir / "summary.txt", summary);
    if (fit) {
        write_text_file(dir / "plot.svg", svg_scatter(*fit, xlabel, ylabel, "scaling fit"));
    }
}

} // namespace zk::report
