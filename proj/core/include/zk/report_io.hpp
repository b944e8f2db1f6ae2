#ifndef ZK_REPORT_IO_HPP
#define ZK_REPORT_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "zk/scaling_fit.hpp"

namespace zk::report {

/// Deterministic round-trip formatting ("%.17g"); bitwise-stable across runs.
std::string fmt_double(double v);

/** One row of the flat cross-experiment CSV schema
 * experiment,d,p,q,r,s,k_power,band,j,k,seed,value,kind — unset fields empty. */
struct CsvRow {
    std::string experiment;
    std::optional<int> d;
    std::optional<double> p, q, r, s;
    std::optional<int> k_power, band, j, k;
    std::optional<unsigned long long> seed;
    std::optional<double> value;
    std::string kind;
};

std::string csv_header();
std::string to_csv(const std::vector<CsvRow>& rows);

/// Log-log scatter with the fitted line; axes labelled, slope annotated.
std::string svg_scatter(const ScalingFitReport& fit, const std::string& xlabel,
                        const std::string& ylabel, const std::string& title);

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

/** Writes the standard experiment bundle into dir: resolved-config.json,
 * results.csv, results.json, summary.txt and (when a fit is given) plot.svg. */
void emit_experiment(const std::filesystem::path& dir, const std::string& config_json,
                     const std::vector<CsvRow>& rows, const std::string& results_json,
                     const std::string& summary, const ScalingFitReport* fit = nullptr,
                     const std::string& xlabel = "log2 scale",
                     const std::string& ylabel = "log2 value");

} // namespace zk::report

#endif
