#include "avgsearch/decay.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "avgsearch/analysis.hpp"
#include "avgsearch/errors.hpp"
#include "avgsearch/fsutil.hpp"
#include "avgsearch/numfmt.hpp"
#include "avgsearch/report.hpp"
#include "avgsearch/search.hpp"

namespace avgsearch {

double fit_decay_exponent(const std::vector<std::size_t>& m_values,
                          const std::vector<double>& wce_values) {
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < m_values.size() && i < wce_values.size(); ++i) {
        if (wce_values[i] > 0.0) {
            xs.push_back(std::log(static_cast<double>(m_values[i])));
            ys.push_back(std::log(wce_values[i]));
        }
    }
    if (xs.size() < 2) return std::numeric_limits<double>::quiet_NaN();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return num / den;
}

namespace {

std::map<std::size_t, std::string> load_existing_rows(const std::string& path) {
    std::map<std::size_t, std::string> rows;
    if (!std::filesystem::exists(path)) return rows;
    std::string text = read_text_file(path);
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) return rows;
    ++line_no;
    if (line != report_csv_header)
        throw IoError(path + ": existing file does not carry the expected decay header; "
                             "remove it or point the sweep at a clean directory");
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split_report_csv_row(line, path, line_no);
        rows[static_cast<std::size_t>(std::strtoull(fields[0].c_str(), nullptr, 10))] = line;
    }
    return rows;
}

std::string csv_content(const std::vector<std::string>& rows) {
    std::string out = report_csv_header;
    out += '\n';
    for (const auto& row : rows) {
        out += row;
        out += '\n';
    }
    return out;
}

std::string row_to_json(const std::vector<std::string>& fields) {
    static const char* names[8] = {"m",       "d",           "pair_energy", "spectral_energy",
                                   "wce_grid", "grid_G",      "cs_bound",    "theorem_bound"};
    std::string out = "{";
    for (int i = 0; i < 8; ++i) {
        if (i > 0) out += ',';
        out += '"';
        out += names[i];
        out += "\":";
        out += fields[static_cast<std::size_t>(i)];
    }
    out += '}';
    return out;
}

std::string series_json(const DecaySeriesResult& series, const std::string& kernel_desc,
                        const std::string& csv_path) {
    std::string out = "{\n";
    out += "  \"series\": \"" + series.series + "\",\n";
    out += "  \"kernel\": \"" + kernel_desc + "\",\n";
    if (std::isnan(series.empirical_exponent))
        out += "  \"empirical_decay_exponent\": null,\n";
    else
        out += "  \"empirical_decay_exponent\": " + format_double(series.empirical_exponent) + ",\n";
    out += "  \"exponent_note\": \"empirical least-squares slope of log(wce_grid) vs log(m); "
           "reported, never asserted\",\n";
    out += "  \"rows\": [\n";
    for (std::size_t i = 0; i < series.csv_rows.size(); ++i) {
        auto fields = split_report_csv_row(series.csv_rows[i], csv_path, i + 2);
        out += "    " + row_to_json(fields);
        if (i + 1 < series.csv_rows.size()) out += ',';
        out += '\n';
    }
    out += "  ]\n}\n";
    return out;
}

} // namespace

DecayOutcome run_decay(const ExperimentConfig& config, std::ostream& log) {
    if (config.sweep.m_values.empty())
        throw std::invalid_argument("decay sweep needs a [sweep] section with m values");

    FourierKernel kernel = config.kernel.build();
    auto violations = kernel.admissibility_violations();
    if (!violations.empty()) {
        std::string msg = "decay requires an admissible kernel:";
        for (const auto& v : violations) msg += "\n  " + v;
        throw std::invalid_argument(msg);
    }

    std::filesystem::create_directories(config.output.directory);
    int grid = config.resolved_grid_G();
    const auto& sweep = config.sweep.m_values;

    std::vector<std::string> series_names{variant_name(config.search.variant)};
    if (config.analysis.baseline_random) series_names.push_back("random");
    if (config.analysis.baseline_equispaced) series_names.push_back("equispaced");

    DecayOutcome outcome;
    for (const auto& name : series_names) {
        DecaySeriesResult result;
        result.series = name;
        result.empirical_exponent = std::numeric_limits<double>::quiet_NaN();
        result.csv_path =
            (std::filesystem::path(config.output.directory) / ("decay_" + name + ".csv")).string();

        auto existing = load_existing_rows(result.csv_path);
        std::size_t m_needed = 0;
        for (std::size_t m : sweep)
            if (!existing.contains(m)) m_needed = std::max(m_needed, m);

        // Sequential constructions are prefix-stable, so one run at the
        // largest missing m serves every smaller row.
        std::optional<PointSet> points;
        if (m_needed > 0) {
            if (name == "random")
                points = random_points(config.kernel.dim, m_needed, config.search.seed);
            else if (name != "equispaced")
                points = run_search(kernel, m_needed, config.search).points;
        }

        for (std::size_t m : sweep) {
            auto it = existing.find(m);
            if (it != existing.end()) {
                result.csv_rows.push_back(it->second);
                ++result.rows_reused;
                continue;
            }
            PointSet slice = (name == "equispaced") ? equispaced_points(1, m)
                                                    : points->prefix(m);
            ErrorReport report = make_error_report(kernel, slice, grid);
            result.csv_rows.push_back(report_csv_row(report));
            ++result.rows_computed;
            if (config.output.csv) write_text_atomic(result.csv_path, csv_content(result.csv_rows));
        }
        if (config.output.csv) write_text_atomic(result.csv_path, csv_content(result.csv_rows));

        std::vector<std::size_t> ms;
        std::vector<double> wces;
        for (std::size_t i = 0; i < result.csv_rows.size(); ++i) {
            auto fields = split_report_csv_row(result.csv_rows[i], result.csv_path, i + 2);
            ms.push_back(static_cast<std::size_t>(std::strtoull(fields[0].c_str(), nullptr, 10)));
            wces.push_back(std::strtod(fields[4].c_str(), nullptr));
        }
        result.empirical_exponent = fit_decay_exponent(ms, wces);

        if (config.output.json) {
            std::string json_path =
                (std::filesystem::path(config.output.directory) / ("decay_" + name + ".json"))
                    .string();
            write_text_atomic(json_path, series_json(result, kernel.description(), result.csv_path));
        }

        log << "series " << name << ": " << result.csv_rows.size() << " rows ("
            << result.rows_computed << " computed, " << result.rows_reused << " reused)";
        if (config.output.csv) log << " -> " << result.csv_path;
        log << "\n";
        log << "  empirical decay exponent (log wce_grid vs log m): ";
        if (std::isnan(result.empirical_exponent)) log << "n/a";
        else log << format_double(result.empirical_exponent);
        log << "\n";

        outcome.series.push_back(std::move(result));
    }
    return outcome;
}

} // namespace avgsearch
