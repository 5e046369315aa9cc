#include "avgsearch/search.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "avgsearch/errors.hpp"
#include "avgsearch/numfmt.hpp"
#include "avgsearch/rng.hpp"
#include "avgsearch/torus.hpp"

namespace avgsearch {

const char* variant_name(SearchVariant v) noexcept {
    return v == SearchVariant::Averaging ? "averaging" : "greedy";
}

int default_grid_resolution(int dim) noexcept {
    switch (dim) {
        case 1: return 256;
        case 2: return 64;
        case 3: return 16;
        default: return 8;
    }
}

namespace {

// Plain left-to-right accumulation; the greedy grid adds the same terms in
// the same order, so both paths yield identical doubles.
double partial_sum_flat(const FourierKernel& kernel, int dim,
                        std::span<const double> flat_prefix,
                        std::span<const double> x) {
    auto d = static_cast<std::size_t>(dim);
    double s = 0.0;
    for (std::size_t j = 0; j * d < flat_prefix.size(); ++j)
        s += kernel.centered_diff(x, flat_prefix.subspan(j * d, d));
    return s;
}

std::vector<double> resolve_first_point(const FourierKernel& kernel,
                                        const SearchConfig& config) {
    auto d = static_cast<std::size_t>(kernel.dim());
    if (config.first_point.empty()) return std::vector<double>(d, 0.0);
    if (config.first_point.size() != d)
        throw DimensionMismatch("search: first_point has wrong dimension");
    std::vector<double> p(config.first_point);
    for (double& c : p) {
        if (!std::isfinite(c)) throw std::invalid_argument("search: non-finite first_point");
        c = reduce_unit(c);
    }
    return p;
}

int resolve_grid_resolution(const FourierKernel& kernel, const SearchConfig& config) {
    int res = config.grid_resolution > 0 ? config.grid_resolution
                                         : default_grid_resolution(kernel.dim());
    // The scan relies on the grid average of every partial sum being zero,
    // which needs G to exceed every support frequency.
    if (res <= kernel.max_abs_frequency())
        throw std::invalid_argument(
            "greedy search: grid_resolution (" + std::to_string(res) +
            ") must exceed the kernel's largest frequency (" +
            std::to_string(kernel.max_abs_frequency()) + ")");
    return res;
}

void require_admissible(const FourierKernel& kernel) {
    auto violations = kernel.admissibility_violations();
    if (violations.empty()) return;
    std::string msg = "search requires an admissible kernel:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw std::invalid_argument(msg);
}

void validate_common(const FourierKernel& kernel, std::size_t m, const SearchConfig& config) {
    require_admissible(kernel);
    if (m < 1) throw std::invalid_argument("search: m must be >= 1");
    if (config.candidate_budget < 1)
        throw std::invalid_argument("search: candidate_budget must be positive");
    if (config.refinement_steps < 0)
        throw std::invalid_argument("search: refinement_steps must be >= 0");
}

Provenance make_provenance(SearchVariant variant, const FourierKernel& kernel,
                           const SearchConfig& config, int grid_resolution,
                           std::span<const double> first_point) {
    std::string fp;
    for (std::size_t i = 0; i < first_point.size(); ++i) {
        if (i > 0) fp += ',';
        fp += format_double(first_point[i]);
    }
    Provenance p;
    p.emplace_back("algorithm", variant_name(variant));
    p.emplace_back("kernel", kernel.description());
    p.emplace_back("first_point", fp);
    if (variant == SearchVariant::Averaging) {
        p.emplace_back("seed", std::to_string(config.seed));
        p.emplace_back("candidate_budget", std::to_string(config.candidate_budget));
    } else {
        p.emplace_back("grid_resolution", std::to_string(grid_resolution));
        p.emplace_back("refinement_steps", std::to_string(config.refinement_steps));
    }
    return p;
}

// Running values of S(x) = sum_j F0(x - xi^j) on the scan grid.  add_point
// appends one term per grid node, in point order, with plain +=, keeping
// every entry bit-identical to partial_sum_flat at that node.
class GreedyGrid {
public:
    GreedyGrid(int dim, int resolution)
        : dim_(dim),
          resolution_(resolution),
          sums_(unit_grid_size(dim, resolution), 0.0),
          node_(static_cast<std::size_t>(dim)) {}

    void add_point(const FourierKernel& kernel, std::span<const double> p) {
        for (std::size_t idx = 0; idx < sums_.size(); ++idx) {
            unit_grid_point(idx, dim_, resolution_, node_);
            sums_[idx] += kernel.centered_diff(node_, p);
        }
    }

    std::size_t size() const noexcept { return sums_.size(); }
    int resolution() const noexcept { return resolution_; }

    // Minimum with lexicographic tie-break: strict < keeps the first (and
    // lex-smallest) grid index among equal values.
    std::size_t argmin() const noexcept {
        std::size_t best = 0;
        for (std::size_t idx = 1; idx < sums_.size(); ++idx)
            if (sums_[idx] < sums_[best]) best = idx;
        return best;
    }

    double value(std::size_t idx) const noexcept { return sums_[idx]; }

    std::vector<double> node(std::size_t idx) const {
        std::vector<double> out(static_cast<std::size_t>(dim_));
        unit_grid_point(idx, dim_, resolution_, out);
        return out;
    }

private:
    int dim_;
    int resolution_;
    std::vector<double> sums_;
    mutable std::vector<double> node_;
};

// Golden-section pass over one coordinate within [center-h, center+h].
// Probes are committed at reduced coordinates, and only strict improvements
// move the point, so the result is never worse than the input.
struct RefineState {
    std::vector<double> point;
    double value;
    std::size_t evaluations = 0;
};

void refine_coordinate(const FourierKernel& kernel, int dim,
                       std::span<const double> flat_prefix, int coordinate,
                       double half_width, int steps, RefineState& state) {
    constexpr double invphi = 0.6180339887498948482;  // (sqrt(5)-1)/2
    auto c = static_cast<std::size_t>(coordinate);
    std::vector<double> probe(state.point);

    auto eval_at = [&](double t) {
        probe[c] = reduce_unit(t);
        double s = partial_sum_flat(kernel, dim, flat_prefix, probe);
        ++state.evaluations;
        if (s < state.value) {
            state.value = s;
            state.point = probe;
        }
        return s;
    };

    double a = state.point[c] - half_width;
    double b = state.point[c] + half_width;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = eval_at(x1);
    double f2 = eval_at(x2);
    for (int it = 0; it < steps; ++it) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = eval_at(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = eval_at(x2);
        }
    }
}

StepOutcome select_greedy(const FourierKernel& kernel, int dim,
                          std::span<const double> flat_prefix,
                          const GreedyGrid& grid, const SearchConfig& config) {
    std::size_t best_idx = grid.argmin();

    RefineState state;
    state.point = grid.node(best_idx);
    state.value = grid.value(best_idx);
    state.evaluations = grid.size();

    double h = 1.0 / static_cast<double>(grid.resolution());
    if (config.refinement_steps > 0)
        for (int c = 0; c < dim; ++c)
            refine_coordinate(kernel, dim, flat_prefix, c, h,
                              config.refinement_steps, state);

    return {std::move(state.point), state.value, state.evaluations};
}

} // namespace

double partial_sum(const FourierKernel& kernel, const PointSet& prefix,
                   std::span<const double> x) {
    if (prefix.dim() != kernel.dim())
        throw DimensionMismatch("partial_sum: prefix dimension differs from kernel");
    return partial_sum_flat(kernel, kernel.dim(), prefix.coords(), x);
}

StepOutcome greedy_step(const FourierKernel& kernel, const PointSet& prefix,
                        const SearchConfig& config) {
    require_admissible(kernel);
    if (prefix.dim() != kernel.dim())
        throw DimensionMismatch("greedy_step: prefix dimension differs from kernel");
    int res = resolve_grid_resolution(kernel, config);
    GreedyGrid grid(kernel.dim(), res);
    auto d = static_cast<std::size_t>(kernel.dim());
    for (std::size_t j = 0; j < prefix.size(); ++j)
        grid.add_point(kernel, prefix.coords().subspan(j * d, d));
    return select_greedy(kernel, kernel.dim(), prefix.coords(), grid, config);
}

SearchResult averaging_search(const FourierKernel& kernel, std::size_t m,
                              const SearchConfig& config) {
    validate_common(kernel, m, config);
    int dim = kernel.dim();
    auto d = static_cast<std::size_t>(dim);
    std::vector<double> first = resolve_first_point(kernel, config);

    SplitMix64 rng(config.seed);
    std::vector<double> coords(first);
    coords.reserve(m * d);
    SearchTrace trace;
    trace.steps.push_back({1, first, 0.0, 0});

    std::vector<double> candidate(d);
    for (std::size_t n = 2; n <= m; ++n) {
        bool accepted = false;
        for (long attempt = 1; attempt <= config.candidate_budget; ++attempt) {
            for (double& c : candidate) c = rng.next_double();
            double s = partial_sum_flat(kernel, dim, coords, candidate);
            if (s <= 0.0) {
                coords.insert(coords.end(), candidate.begin(), candidate.end());
                trace.steps.push_back({n, candidate, s,
                                       static_cast<std::size_t>(attempt)});
                accepted = true;
                break;
            }
        }
        if (!accepted) throw CandidateBudgetExhausted(n, config.candidate_budget);
    }

    Provenance prov = make_provenance(SearchVariant::Averaging, kernel, config, 0, first);
    return {PointSet(dim, std::move(coords), std::move(prov)), std::move(trace)};
}

SearchResult greedy_averaging_search(const FourierKernel& kernel, std::size_t m,
                                     const SearchConfig& config) {
    validate_common(kernel, m, config);
    int dim = kernel.dim();
    int res = resolve_grid_resolution(kernel, config);
    std::vector<double> first = resolve_first_point(kernel, config);

    GreedyGrid grid(dim, res);
    std::vector<double> coords(first);
    coords.reserve(m * static_cast<std::size_t>(dim));
    SearchTrace trace;
    trace.steps.push_back({1, first, 0.0, 0});
    grid.add_point(kernel, first);

    for (std::size_t n = 2; n <= m; ++n) {
        StepOutcome outcome = select_greedy(kernel, dim, coords, grid, config);
        if (!(outcome.objective <= 0.0))
            throw std::logic_error("greedy search: grid minimum above zero at step " +
                                   std::to_string(n));
        grid.add_point(kernel, outcome.point);
        coords.insert(coords.end(), outcome.point.begin(), outcome.point.end());
        trace.steps.push_back({n, std::move(outcome.point), outcome.objective,
                               outcome.candidates_examined});
    }

    Provenance prov = make_provenance(SearchVariant::Greedy, kernel, config, res, first);
    return {PointSet(dim, std::move(coords), std::move(prov)), std::move(trace)};
}

SearchResult run_search(const FourierKernel& kernel, std::size_t m,
                        const SearchConfig& config) {
    return config.variant == SearchVariant::Averaging
               ? averaging_search(kernel, m, config)
               : greedy_averaging_search(kernel, m, config);
}

} // namespace avgsearch
