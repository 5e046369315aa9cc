// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Every tolerance is pinned in code next to the check it guards.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "avgsearch/analysis.hpp"
#include "avgsearch/compensated.hpp"
#include "avgsearch/fsutil.hpp"
#include "avgsearch/kernel.hpp"
#include "avgsearch/numfmt.hpp"
#include "avgsearch/pointset.hpp"
#include "avgsearch/rng.hpp"
#include "avgsearch/search.hpp"

namespace fs = std::filesystem;
using namespace avgsearch;

namespace {

int failures = 0;

void report(int criterion, bool passed, const std::string& detail) {
    std::cout << (passed ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << detail
              << "\n";
    if (!passed) ++failures;
}

std::vector<std::size_t> powers_of_two_up_to(std::size_t limit) {
    std::vector<std::size_t> out;
    for (std::size_t m = 1; m <= limit; m *= 2) out.push_back(m);
    return out;
}

struct RunRecord {
    std::string label;
    int dim;
    SearchResult result;
};

// Criterion 1: for korobov(r=2, K=8), d in {1,2,3}, both variants,
// m in {1,2,4,...}: cs_bound <= theorem_bound * (1 + 1e-12) and
// wce_grid <= theorem_bound.
std::vector<RunRecord> criterion_1() {
    std::vector<RunRecord> runs;
    bool ok = true;
    std::string first_problem;

    for (int dim : {1, 2, 3}) {
        auto kernel = FourierKernel::korobov(dim, 2.0, 8);
        std::size_t m_max = dim < 3 ? 512 : 128;
        int wce_grid_res = default_analysis_grid(dim);

        for (auto variant : {SearchVariant::Averaging, SearchVariant::Greedy}) {
            SearchConfig config;
            config.variant = variant;
            config.seed = 1000 + static_cast<std::uint64_t>(dim);
            auto result = run_search(kernel, m_max, config);

            for (std::size_t m : powers_of_two_up_to(m_max)) {
                PointSet slice = result.points.prefix(m);
                double cs = cs_bound(kernel, slice);
                double bound = theorem_bound(kernel, m);
                if (!(cs <= bound * (1.0 + 1e-12))) {
                    ok = false;
                    if (first_problem.empty())
                        first_problem = "cs_bound " + format_double(cs) + " > theorem_bound " +
                                        format_double(bound) + " at d=" + std::to_string(dim) +
                                        " m=" + std::to_string(m) + " (" +
                                        variant_name(variant) + ")";
                }
                double wce = wce_l1_class(kernel, slice, wce_grid_res).value;
                if (!(wce <= bound)) {
                    ok = false;
                    if (first_problem.empty())
                        first_problem = "wce_grid " + format_double(wce) + " > theorem_bound " +
                                        format_double(bound) + " at d=" + std::to_string(dim) +
                                        " m=" + std::to_string(m) + " (" +
                                        variant_name(variant) + ")";
                }
            }
            runs.push_back({std::string(variant_name(variant)) + " d=" + std::to_string(dim) +
                                " m=" + std::to_string(m_max),
                            dim, std::move(result)});
        }
    }

    report(1, ok,
           ok ? "theorem guarantee: cs_bound <= theorem_bound*(1+1e-12) and wce_grid <= "
                "theorem_bound for d=1,2,3, both variants, m up to 512/512/128"
              : "theorem guarantee violated: " + first_problem);
    return runs;
}

// Criterion 2: every trace has S_n <= 0 for n >= 2, and
// m*F0(0) - pair_energy == -2*sum S_n to 1e-9 relative.
void criterion_2(const std::vector<RunRecord>& runs) {
    bool ok = true;
    std::string first_problem;

    for (const auto& run : runs) {
        auto kernel = FourierKernel::korobov(run.dim, 2.0, 8);
        for (const auto& step : run.result.trace.steps) {
            if (step.index >= 2 && !(step.objective <= 0.0)) {
                ok = false;
                if (first_problem.empty())
                    first_problem = run.label + ": S_" + std::to_string(step.index) + " = " +
                                    format_double(step.objective) + " > 0";
            }
        }

        double energy = pair_energy_direct(kernel, run.result.points);
        std::vector<double> origin(static_cast<std::size_t>(run.dim), 0.0);
        double diagonal = static_cast<double>(run.result.points.size()) * kernel.centered(origin);
        CompensatedSum trace_sum;
        for (const auto& step : run.result.trace.steps)
            if (step.index >= 2) trace_sum.add(step.objective);
        double defect = diagonal - energy;          // m F0(0) - E
        double expected = -2.0 * trace_sum.value(); // -2 sum S_n
        double scale = std::max({1.0, std::abs(defect), std::abs(expected)});
        if (std::abs(defect - expected) > 1e-9 * scale) {
            ok = false;
            if (first_problem.empty())
                first_problem = run.label + ": defect " + format_double(defect) +
                                " vs -2*sum(S_n) " + format_double(expected);
        }
        if (!(energy <= diagonal + 1e-9)) {
            ok = false;
            if (first_problem.empty())
                first_problem = run.label + ": pair energy exceeds m*F0(0)";
        }
    }

    report(2, ok,
           ok ? "proof-step inequality: all S_n <= 0 and the telescoped energy defect "
                "-2*sum(S_n) reproduces to 1e-9 relative"
              : "proof-step inequality violated: " + first_problem);
}

// Criterion 3: Lemma identity on 50 random (set, kernel) pairs, d <= 3,
// m <= 64, K <= 8, to 1e-9 relative.
void criterion_3() {
    SplitMix64 rng(314159);
    bool ok = true;
    double worst = 0.0;
    std::string first_problem;

    for (int trial = 0; trial < 50; ++trial) {
        int dim = 1 + static_cast<int>(rng.next_u64() % 3);
        std::size_t m = 1 + rng.next_u64() % 64;
        int K = 1 + static_cast<int>(rng.next_u64() % 8);
        double r = 1.5 + 1.5 * rng.next_double();
        auto kernel = FourierKernel::korobov(dim, r, K);
        PointSet set = random_points(dim, m, rng.next_u64());

        double direct = pair_energy_direct(kernel, set);
        double spectral = pair_energy_spectral(kernel, set);
        double rel = std::abs(direct - spectral) / std::max(1.0, std::abs(direct));
        worst = std::max(worst, rel);
        if (rel > 1e-9 || spectral < 0.0) {
            ok = false;
            if (first_problem.empty())
                first_problem = "trial " + std::to_string(trial) + ": rel error " +
                                format_double(rel);
        }
    }

    report(3, ok,
           ok ? "energy identity: direct vs spectral agree on 50 random pairs "
                "(worst rel error " + format_double(worst) + " <= 1e-9)"
              : "energy identity violated: " + first_problem);
}

// Criterion 4: equispaced d=1 sets match the survivor closed form
// m^2 * 2 sum_{lm <= K} (lm)^-r to 1e-10 relative; m=2, K=4, r=2 gives 2.5
// by both energy routes.
void criterion_4() {
    bool ok = true;
    std::string first_problem;

    for (int K : {4, 8, 16}) {
        auto kernel = FourierKernel::korobov(1, 2.0, K);
        for (std::size_t m : {2, 3, 4, 8}) {
            PointSet set = equispaced_points(1, m);
            double expected = 0.0;
            for (std::size_t l = 1; l * m <= static_cast<std::size_t>(K); ++l)
                expected += 2.0 * std::pow(static_cast<double>(l * m), -2.0);
            expected *= static_cast<double>(m) * static_cast<double>(m);

            double spectral = pair_energy_spectral(kernel, set);
            if (std::abs(spectral - expected) > 1e-10 * std::max(1.0, expected)) {
                ok = false;
                if (first_problem.empty())
                    first_problem = "m=" + std::to_string(m) + " K=" + std::to_string(K) +
                                    ": spectral " + format_double(spectral) + " vs closed form " +
                                    format_double(expected);
            }
        }
    }

    auto kernel = FourierKernel::korobov(1, 2.0, 4);
    PointSet two = equispaced_points(1, 2);
    double direct = pair_energy_direct(kernel, two);
    double spectral = pair_energy_spectral(kernel, two);
    if (std::abs(direct - 2.5) > 1e-10 || std::abs(spectral - 2.5) > 1e-10) {
        ok = false;
        if (first_problem.empty())
            first_problem = "m=2 K=4 energies " + format_double(direct) + " / " +
                            format_double(spectral) + " differ from 2.5";
    }

    report(4, ok,
           ok ? "equispaced oracle: spectral energy matches m^2 * 2 sum (lm)^-r to 1e-10 "
                "(m in {2,3,4,8}, K in {4,8,16}); m=2,K=4 gives 2.5 on both routes"
              : "equispaced oracle violated: " + first_problem);
}

// Criterion 5: replaying averaging prefixes through the greedy step yields
// greedy S_n <= averaging S_n at every step, 10 seeded runs, m=64, d=1.
void criterion_5() {
    auto kernel = FourierKernel::korobov(1, 2.0, 8);
    bool ok = true;
    std::string first_problem;

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        SearchConfig averaging;
        averaging.variant = SearchVariant::Averaging;
        averaging.seed = seed;
        auto run = averaging_search(kernel, 64, averaging);

        SearchConfig greedy;
        greedy.variant = SearchVariant::Greedy;
        for (const auto& step : run.trace.steps) {
            if (step.index < 2) continue;
            auto outcome = greedy_step(kernel, run.points.prefix(step.index - 1), greedy);
            if (!(outcome.objective <= step.objective)) {
                ok = false;
                if (first_problem.empty())
                    first_problem = "seed " + std::to_string(seed) + " step " +
                                    std::to_string(step.index) + ": greedy " +
                                    format_double(outcome.objective) + " > averaging " +
                                    format_double(step.objective);
            }
        }
    }

    report(5, ok,
           ok ? "greedy dominance: greedy step minimum <= averaging value at every step "
                "of 10 seeded runs (m=64, d=1)"
              : "greedy dominance violated: " + first_problem);
}

// Criterion 6: the all-points-equal set keeps cs_bound at ||F0||_inf for
// every m (|Q| = 1 at all frequencies), with the wce <= cs ordering intact.
void criterion_6() {
    auto kernel = FourierKernel::korobov(2, 2.0, 8);
    double sup = kernel.sup_norm_centered();
    bool ok = true;
    std::string first_problem;

    for (std::size_t m : {2, 8, 64}) {
        std::vector<double> coords;
        for (std::size_t j = 0; j < m; ++j) {
            coords.push_back(0.3);
            coords.push_back(0.7);
        }
        PointSet set(2, coords);
        double cs = cs_bound(kernel, set);
        if (std::abs(cs - sup) > 1e-9 * sup) {
            ok = false;
            if (first_problem.empty())
                first_problem = "m=" + std::to_string(m) + ": cs_bound " + format_double(cs) +
                                " vs ||F0||_inf " + format_double(sup);
        }
        double wce = wce_l1_class(kernel, set, 64).value;
        if (!(wce <= cs * (1.0 + 1e-9))) {
            ok = false;
            if (first_problem.empty())
                first_problem = "m=" + std::to_string(m) + ": wce above cs_bound";
        }
    }

    report(6, ok,
           ok ? "degenerate set: cs_bound stays at ||F0||_inf independent of m, chain ordered"
              : "degenerate set behavior violated: " + first_problem);
}

// Criterion 7: two decay runs with identical config produce byte-identical
// CSV output.
void criterion_7() {
    fs::path dir = fs::temp_directory_path() / "avgsearch_acceptance_decay";
    fs::remove_all(dir);
    fs::create_directories(dir);

    std::string config =
        "[kernel]\ntype = korobov\ndim = 1\nr = 2\nK = 8\n\n"
        "[algorithm]\nvariant = greedy\n\n"
        "[sweep]\nm = 1 2 4 8 16 32 64\n\n"
        "[analysis]\ngrid_G = 512\nbaselines = random equispaced\n\n"
        "[output]\nformats = csv\n";
    {
        std::ofstream out(dir / "exp.ini");
        out << config;
    }

    auto run_decay_cli = [&](const std::string& out_dir) {
        std::string cmd = std::string(AVGSEARCH_CLI_PATH) + " decay --config " +
                          (dir / "exp.ini").string() + " --out " + out_dir + " > " +
                          (dir / "log.txt").string() + " 2>&1";
        int status = std::system(cmd.c_str());
        return (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    };

    bool ok = run_decay_cli((dir / "a").string()) == 0 &&
              run_decay_cli((dir / "b").string()) == 0;
    std::string detail;
    if (!ok) {
        detail = "decay command failed";
    } else {
        for (const char* series : {"greedy", "random", "equispaced"}) {
            std::string fa = (dir / "a" / ("decay_" + std::string(series) + ".csv")).string();
            std::string fb = (dir / "b" / ("decay_" + std::string(series) + ".csv")).string();
            if (read_text_file(fa) != read_text_file(fb)) {
                ok = false;
                detail = std::string("series ") + series + " differs between runs";
                break;
            }
        }
    }

    report(7, ok,
           ok ? "determinism: two decay executions with identical config produce "
                "byte-identical CSV output"
              : "determinism violated: " + detail);
}

} // namespace

int main() {
    auto runs = criterion_1();
    criterion_2(runs);
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    std::cout << "[SKIP] criterion 8: excluded by design (non-constructive existence results; "
                 "the greedy rate past m^-1/2 is an open problem, measured but never asserted)\n";

    if (failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) failed\n";
    return 1;
}
