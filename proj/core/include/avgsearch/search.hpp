#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "avgsearch/kernel.hpp"
#include "avgsearch/pointset.hpp"

namespace avgsearch {

enum class SearchVariant { Averaging, Greedy };

const char* variant_name(SearchVariant v) noexcept;

// Coarse-scan resolution for the greedy minimizer: 256 / 64 / 16 per
// coordinate for d = 1 / 2 / 3, 8 beyond.
int default_grid_resolution(int dim) noexcept;

struct SearchConfig {
    SearchVariant variant = SearchVariant::Averaging;
    std::vector<double> first_point;  // empty = origin
    std::uint64_t seed = 0;           // averaging candidate stream
    long candidate_budget = 10000;    // averaging: max draws per step
    int grid_resolution = 0;          // greedy: 0 = default_grid_resolution(d)
    int refinement_steps = 30;        // greedy: golden-section iterations per coordinate
};

struct SearchStep {
    std::size_t index;              // n, 1-based
    std::vector<double> point;      // xi^n
    double objective;               // S_n = sum_{j<n} F0(xi^n - xi^j); 0 at n = 1
    std::size_t candidates_examined;
};

struct SearchTrace {
    std::vector<SearchStep> steps;
};

struct SearchResult {
    PointSet points;
    SearchTrace trace;
};

// S(x) = sum_j F0(x - xi^j) over the prefix, accumulated left to right in
// point order.  The greedy grid accumulates the same terms in the same
// order, so the values the search accepted reproduce here bit for bit.
double partial_sum(const FourierKernel& kernel, const PointSet& prefix,
                   std::span<const double> x);

struct StepOutcome {
    std::vector<double> point;
    double objective;
    std::size_t candidates_examined;
};

// One greedy selection against an arbitrary prefix: scan of the uniform
// G^d grid (ties resolved to the lexicographically smallest grid point)
// followed by a per-coordinate golden-section pass inside the winning cell.
// Never returns a point worse than the grid winner.
StepOutcome greedy_step(const FourierKernel& kernel, const PointSet& prefix,
                        const SearchConfig& config);

// Sequential constructions applied to g = F0.  Step 1 places
// config.first_point (origin by default); every later step records an
// objective S_n <= 0.  Averaging draws seeded uniform candidates until one
// satisfies S <= 0 and throws CandidateBudgetExhausted past the budget;
// greedy minimizes over the grid.  Both are deterministic functions of
// (kernel, m, config).
SearchResult averaging_search(const FourierKernel& kernel, std::size_t m,
                              const SearchConfig& config);
SearchResult greedy_averaging_search(const FourierKernel& kernel, std::size_t m,
                                     const SearchConfig& config);

// Dispatch on config.variant.
SearchResult run_search(const FourierKernel& kernel, std::size_t m,
                        const SearchConfig& config);

} // namespace avgsearch
