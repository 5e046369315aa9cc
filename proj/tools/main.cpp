#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "avgsearch/analysis.hpp"
#include "avgsearch/config.hpp"
#include "avgsearch/decay.hpp"
#include "avgsearch/errors.hpp"
#include "avgsearch/fsutil.hpp"
#include "avgsearch/numfmt.hpp"
#include "avgsearch/pointset.hpp"
#include "avgsearch/report.hpp"
#include "avgsearch/search.hpp"

#include "verify_checks.hpp"

namespace {

using namespace avgsearch;

// Exit codes: 0 success, 1 invariant/certification failure, 2 usage/config
// error, 3 I/O error.
constexpr int exit_ok = 0;
constexpr int exit_invariant = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

struct GenOptions {
    std::string config_path;
    long long m = 0;
    std::string points_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    bool seed_given = false;
};

struct AnalyzeOptions {
    std::string kernel_path;
    std::string points_path;
    int grid = 0;
    std::string out_dir;
    std::string format = "csv";
};

struct DecayOptions {
    std::string config_path;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out_dir;
    std::string format;
};

int cmd_gen(const GenOptions& opt) {
    ExperimentConfig config = load_experiment_config(opt.config_path);
    if (opt.seed_given) config.search.seed = opt.seed;

    FourierKernel kernel = config.kernel.build();
    auto violations = kernel.admissibility_violations();
    if (!violations.empty()) {
        std::cerr << "error: kernel is not admissible:\n";
        for (const auto& v : violations) std::cerr << "  " << v << "\n";
        return exit_usage;
    }

    auto m = static_cast<std::size_t>(opt.m);
    SearchResult result = run_search(kernel, m, config.search);

    std::string path = opt.points_path;
    if (path.empty()) {
        std::filesystem::create_directories(opt.out_dir);
        path = (std::filesystem::path(opt.out_dir) /
                ("points_" + std::string(variant_name(config.search.variant)) + "_d" +
                 std::to_string(kernel.dim()) + "_m" + std::to_string(m) + ".txt"))
                   .string();
    } else if (auto parent = std::filesystem::path(path).parent_path(); !parent.empty()) {
        std::filesystem::create_directories(parent);
    }
    write_points(result.points, path);

    std::cout << "wrote " << path << " (m=" << m << ", d=" << kernel.dim() << ")\n";
    std::cout << "final S_m        = " << format_double(result.trace.steps.back().objective)
              << "\n";
    std::cout << "theorem bound    = " << format_double(theorem_bound(kernel, m))
              << "  (||F0||_inf * m^-1/2)\n";
    return exit_ok;
}

int cmd_analyze(const AnalyzeOptions& opt) {
    KernelSpec spec = load_kernel_spec(opt.kernel_path);
    FourierKernel kernel = spec.build();
    auto violations = kernel.admissibility_violations();
    if (!violations.empty()) {
        std::cerr << "error: kernel is not admissible:\n";
        for (const auto& v : violations) std::cerr << "  " << v << "\n";
        return exit_usage;
    }

    PointSet points = read_points(opt.points_path);
    if (points.dim() != kernel.dim()) {
        std::cerr << "error: kernel dimension " << kernel.dim()
                  << " does not match point set dimension " << points.dim() << "\n";
        return exit_usage;
    }

    int grid = opt.grid > 0 ? opt.grid : default_analysis_grid(kernel.dim());
    ErrorReport report = make_error_report(kernel, points, grid);

    std::string algorithm = points.provenance_value("algorithm");
    bool search_produced = algorithm == "averaging" || algorithm == "greedy";

    std::cout << "points: " << opt.points_path << " (m=" << points.size()
              << ", d=" << points.dim();
    if (!algorithm.empty()) std::cout << ", algorithm=" << algorithm;
    std::cout << ")\n";
    std::cout << "kernel: " << kernel.description() << "\n";
    std::cout << report_text(report);

    if (!opt.out_dir.empty()) {
        std::filesystem::create_directories(opt.out_dir);
        auto base = std::filesystem::path(opt.out_dir);
        if (opt.format == "csv")
            write_text_atomic((base / "report.csv").string(),
                              std::string(report_csv_header) + "\n" + report_csv_row(report) + "\n");
        else
            write_text_atomic((base / "report.json").string(), report_json(report) + "\n");
    }

    auto problems = report_violations(report, search_produced);
    if (problems.empty()) {
        std::cout << "certification: OK (wce_grid <= cs_bound"
                  << (search_produced ? " <= theorem_bound" : "") << ")\n";
        return exit_ok;
    }
    std::cout << "certification: FAILED\n";
    for (const auto& p : problems) std::cout << "  " << p << "\n";
    return exit_invariant;
}

int cmd_decay(const DecayOptions& opt) {
    ExperimentConfig config = load_experiment_config(opt.config_path);
    if (opt.seed_given) config.search.seed = opt.seed;
    if (!opt.out_dir.empty()) config.output.directory = opt.out_dir;
    if (!opt.format.empty()) {
        config.output.csv = opt.format == "csv";
        config.output.json = opt.format == "json";
    }
    run_decay(config, std::cout);
    return exit_ok;
}

int cmd_verify() {
    auto results = avgsearch::tools::run_verify_checks();
    bool all_ok = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "[ok]   " : "[FAIL] ") << r.name << " - " << r.detail << "\n";
        all_ok = all_ok && r.passed;
    }
    std::cout << (all_ok ? "verify: all checks passed\n" : "verify: FAILURES above\n");
    return all_ok ? exit_ok : exit_invariant;
}

template <class Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const CandidateBudgetExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invariant;
    } catch (const NegativeEnergy& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invariant;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invariant;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"equal-weight cubature point sets on the torus: construction by "
                 "averaging/greedy search, exact energy identities, and worst-case "
                 "error certification"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand(
        "gen", "construct a point set and write an avgsearch-points v1 file");
    gen_cmd->add_option("--config", gen.config_path, "experiment config (INI)")
        ->required();
    gen_cmd->add_option("--m", gen.m, "number of points")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--points", gen.points_path, "output points file (overrides --out)");
    gen_cmd->add_option("--out", gen.out_dir, "output directory (default .)");
    auto* gen_seed = gen_cmd->add_option("--seed", gen.seed, "override the config seed");

    AnalyzeOptions analyze;
    auto* analyze_cmd = app.add_subcommand(
        "analyze", "compute energies, error estimates and bounds for a points file");
    analyze_cmd->add_option("--kernel", analyze.kernel_path, "config file with a [kernel] section")
        ->required();
    analyze_cmd->add_option("--points", analyze.points_path, "avgsearch-points v1 file")
        ->required();
    analyze_cmd->add_option("--grid", analyze.grid, "wce scan resolution per coordinate")
        ->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--out", analyze.out_dir, "directory for report.csv / report.json");
    analyze_cmd->add_option("--format", analyze.format, "report file format")
        ->check(CLI::IsMember({"csv", "json"}));

    DecayOptions decay;
    auto* decay_cmd = app.add_subcommand(
        "decay", "run the configured m sweep and write per-series decay tables");
    decay_cmd->add_option("--config", decay.config_path, "experiment config (INI)")->required();
    auto* decay_seed = decay_cmd->add_option("--seed", decay.seed, "override the config seed");
    decay_cmd->add_option("--out", decay.out_dir, "override the output directory");
    decay_cmd->add_option("--format", decay.format, "restrict output to one format")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "run the built-in invariant checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    gen.seed_given = gen_seed->count() > 0;
    decay.seed_given = decay_seed->count() > 0;

    if (*gen_cmd) return guarded([&] { return cmd_gen(gen); });
    if (*analyze_cmd) return guarded([&] { return cmd_analyze(analyze); });
    if (*decay_cmd) return guarded([&] { return cmd_decay(decay); });
    if (*verify_cmd) return guarded([&] { return cmd_verify(); });
    return exit_usage;
}
