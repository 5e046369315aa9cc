#include "verify_checks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "avgsearch/analysis.hpp"
#include "avgsearch/kernel.hpp"
#include "avgsearch/numfmt.hpp"
#include "avgsearch/pointset.hpp"
#include "avgsearch/search.hpp"

namespace avgsearch::tools {

namespace {

using namespace avgsearch;

CheckResult check_korobov_admissibility() {
    const std::pair<int, int> cases[] = {{1, 8}, {2, 4}, {3, 3}};
    for (auto [d, K] : cases) {
        auto kernel = FourierKernel::korobov(d, 2.0, K);
        if (!kernel.admissibility_violations().empty())
            return {"kernel admissibility", false,
                    "korobov kernel reported violations at d=" + std::to_string(d)};
    }
    return {"kernel admissibility", true, "korobov kernels pass for d = 1, 2, 3"};
}

CheckResult check_admissibility_detector() {
    auto negative = FourierKernel::from_spectrum(1, 1.0, {{{1}, -0.1}});
    auto v1 = negative.admissibility_violations();
    bool caught_negative = false;
    for (const auto& v : v1)
        if (v.find("negative coefficient") != std::string::npos) caught_negative = true;

    auto uneven = FourierKernel::from_spectrum(1, 1.0, {{{1}, 1.0}, {{-1}, 2.0}});
    auto v2 = uneven.admissibility_violations();
    bool caught_uneven = false;
    for (const auto& v : v2)
        if (v.find("evenness") != std::string::npos) caught_uneven = true;

    bool ok = caught_negative && caught_uneven;
    return {"admissibility detector", ok,
            ok ? "planted negative coefficient and evenness mismatch both flagged"
               : "a planted violation went undetected"};
}

CheckResult check_energy_identity() {
    struct Case { int d; std::size_t m; int K; double r; std::uint64_t seed; };
    const Case cases[] = {{1, 24, 8, 2.0, 11}, {2, 16, 4, 2.5, 12}, {3, 10, 3, 1.5, 13}};
    double worst = 0.0;
    for (const auto& c : cases) {
        auto kernel = FourierKernel::korobov(c.d, c.r, c.K);
        auto set = random_points(c.d, c.m, c.seed);
        double direct = pair_energy_direct(kernel, set);
        double spectral = pair_energy_spectral(kernel, set);
        double rel = std::abs(direct - spectral) / std::max(1.0, std::abs(direct));
        worst = std::max(worst, rel);
        if (rel > 1e-9 || spectral < 0.0)
            return {"energy identity", false,
                    "direct/spectral disagree: rel error " + format_double(rel)};
    }
    return {"energy identity", true,
            "direct and spectral energies agree; worst rel error " + format_double(worst)};
}

struct NamedRun {
    const char* label;
    SearchResult result;
};

std::vector<NamedRun> fixed_runs(const FourierKernel& k1, const FourierKernel& k2) {
    SearchConfig averaging;
    averaging.variant = SearchVariant::Averaging;
    averaging.seed = 2718;

    SearchConfig greedy;
    greedy.variant = SearchVariant::Greedy;

    std::vector<NamedRun> runs;
    runs.push_back({"averaging d=1 m=48", averaging_search(k1, 48, averaging)});
    runs.push_back({"greedy d=1 m=32", greedy_averaging_search(k1, 32, greedy)});
    runs.push_back({"greedy d=2 m=16", greedy_averaging_search(k2, 16, greedy)});
    return runs;
}

CheckResult check_trace_inequality(const FourierKernel& k1, const FourierKernel& k2) {
    for (const auto& run : fixed_runs(k1, k2)) {
        const FourierKernel& kernel = run.result.points.dim() == 1 ? k1 : k2;
        for (const auto& step : run.result.trace.steps) {
            if (step.index >= 2 && !(step.objective <= 0.0))
                return {"trace inequality", false,
                        std::string(run.label) + ": positive objective at step " +
                            std::to_string(step.index)};
            if (step.index >= 2) {
                double replay = partial_sum(
                    kernel, run.result.points.prefix(step.index - 1), step.point);
                if (replay != step.objective)
                    return {"trace inequality", false,
                            std::string(run.label) + ": trace value does not replay at step " +
                                std::to_string(step.index)};
            }
        }
    }
    return {"trace inequality", true,
            "every step has S_n <= 0 and the recorded values replay exactly"};
}

CheckResult check_proof_chain(const FourierKernel& k1, const FourierKernel& k2) {
    for (const auto& run : fixed_runs(k1, k2)) {
        const FourierKernel& kernel = run.result.points.dim() == 1 ? k1 : k2;
        int grid = run.result.points.dim() == 1 ? 1024 : 64;
        auto report = make_error_report(kernel, run.result.points, grid);
        auto violations = report_violations(report, true);
        if (!violations.empty())
            return {"proof chain ordering", false,
                    std::string(run.label) + ": " + violations.front()};
    }
    return {"proof chain ordering", true,
            "wce_grid <= cs_bound <= theorem_bound on all built-in runs"};
}

CheckResult check_equispaced_oracle() {
    for (int K : {4, 8, 16}) {
        auto kernel = FourierKernel::korobov(1, 2.0, K);
        for (std::size_t m : {2, 3, 4, 8}) {
            auto set = equispaced_points(1, m);
            double spectral = pair_energy_spectral(kernel, set);
            // Surviving frequencies are the multiples of m inside [-K,K].
            double expected = 0.0;
            for (std::size_t l = 1; l * m <= static_cast<std::size_t>(K); ++l)
                expected += 2.0 * std::pow(static_cast<double>(l * m), -2.0);
            expected *= static_cast<double>(m * m);
            double err = std::abs(spectral - expected) / std::max(1.0, std::abs(expected));
            if (err > 1e-10)
                return {"equispaced oracle", false,
                        "m=" + std::to_string(m) + " K=" + std::to_string(K) +
                            ": rel error " + format_double(err)};
        }
    }
    return {"equispaced oracle", true,
            "spectral energy matches the survivor-frequency closed form"};
}

CheckResult check_determinism(const FourierKernel& k1) {
    SearchConfig config;
    config.variant = SearchVariant::Averaging;
    config.seed = 99;
    auto a = averaging_search(k1, 24, config);
    auto b = averaging_search(k1, 24, config);
    auto ca = a.points.coords();
    auto cb = b.points.coords();
    bool same = ca.size() == cb.size();
    for (std::size_t i = 0; same && i < ca.size(); ++i) same = (ca[i] == cb[i]);
    return {"determinism", same,
            same ? "repeated seeded runs produce identical point sets"
                 : "repeated runs diverged"};
}

} // namespace

std::vector<CheckResult> run_verify_checks() {
    std::vector<CheckResult> results;
    results.push_back(check_korobov_admissibility());
    results.push_back(check_admissibility_detector());
    results.push_back(check_energy_identity());

    auto k1 = FourierKernel::korobov(1, 2.0, 8);
    auto k2 = FourierKernel::korobov(2, 2.0, 4);
    results.push_back(check_trace_inequality(k1, k2));
    results.push_back(check_proof_chain(k1, k2));
    results.push_back(check_equispaced_oracle());
    results.push_back(check_determinism(k1));
    return results;
}

} // namespace avgsearch::tools
