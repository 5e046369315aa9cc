#include "avgsearch/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "avgsearch/errors.hpp"
#include "avgsearch/numfmt.hpp"
#include "avgsearch/torus.hpp"

namespace avgsearch {

namespace {

void require_same_dim(const FourierKernel& kernel, const PointSet& set) {
    if (kernel.dim() != set.dim())
        throw DimensionMismatch("analysis: kernel dimension " + std::to_string(kernel.dim()) +
                                " differs from point set dimension " +
                                std::to_string(set.dim()));
}

double cs_bound_from_energy(double sup_norm, std::size_t m, double energy) {
    if (energy < -1e-9) throw NegativeEnergy(energy);
    if (energy < 0.0) energy = 0.0;
    return std::sqrt(sup_norm) * std::sqrt(energy) / static_cast<double>(m);
}

} // namespace

std::complex<double> exp_sum(const PointSet& set, const FrequencyIndex& k) {
    if (k.size() != static_cast<std::size_t>(set.dim()))
        throw DimensionMismatch("exp_sum: frequency has wrong length");
    CompensatedSum re, im;
    for (std::size_t j = 0; j < set.size(); ++j) {
        auto p = set.point(j);
        double dot = 0.0;
        for (std::size_t i = 0; i < k.size(); ++i) dot += k[i] * p[i];
        double angle = two_pi * reduce_unit(dot);
        re.add(std::cos(angle));
        im.add(std::sin(angle));
    }
    auto m = static_cast<double>(set.size());
    return {re.value() / m, im.value() / m};
}

double pair_energy_direct(const FourierKernel& kernel, const PointSet& set) {
    require_same_dim(kernel, set);
    std::vector<double> origin(static_cast<std::size_t>(set.dim()), 0.0);
    CompensatedSum acc;
    acc.add(static_cast<double>(set.size()) * kernel.centered(origin));
    for (std::size_t n = 1; n < set.size(); ++n)
        for (std::size_t j = 0; j < n; ++j)
            acc.add(2.0 * kernel.centered_diff(set.point(n), set.point(j)));
    return acc.value();
}

double pair_energy_spectral(const FourierKernel& kernel, const PointSet& set) {
    require_same_dim(kernel, set);
    CompensatedSum acc;
    for (const auto& entry : kernel.half_spectrum()) {
        std::complex<double> q = exp_sum(set, entry.k);
        // |Q(-k)| = |Q(k)|, so the mirror doubles the term.
        acc.add(2.0 * entry.coefficient * std::norm(q));
    }
    auto m = static_cast<double>(set.size());
    return m * m * acc.value();
}

double integration_error(const FourierKernel& kernel, const PointSet& set,
                         std::span<const double> y0) {
    require_same_dim(kernel, set);
    if (y0.size() != static_cast<std::size_t>(set.dim()))
        throw DimensionMismatch("integration_error: y0 has wrong dimension");
    double mean = qmc_evaluate(
        [&](std::span<const double> x) { return kernel.centered_diff(x, y0); }, set);
    return std::abs(mean);
}

WceEstimate wce_l1_class(const FourierKernel& kernel, const PointSet& set, int grid) {
    require_same_dim(kernel, set);
    int dim = set.dim();
    std::size_t nodes = unit_grid_size(dim, grid);
    std::vector<double> y(static_cast<std::size_t>(dim));
    WceEstimate best{-1.0, {}, grid};
    for (std::size_t idx = 0; idx < nodes; ++idx) {
        unit_grid_point(idx, dim, grid, y);
        double mean = qmc_evaluate(
            [&](std::span<const double> x) { return kernel.centered_diff(x, y); }, set);
        double a = std::abs(mean);
        if (a > best.value) {
            best.value = a;
            best.argmax.assign(y.begin(), y.end());
        }
    }
    return best;
}

WceEstimate g_sup_norm(const FourierKernel& kernel, const PointSet& set, int grid) {
    return wce_l1_class(kernel, set, grid);
}

double cs_bound(const FourierKernel& kernel, const PointSet& set) {
    require_same_dim(kernel, set);
    return cs_bound_from_energy(kernel.sup_norm_centered(), set.size(),
                                pair_energy_spectral(kernel, set));
}

double theorem_bound(const FourierKernel& kernel, std::size_t m) {
    if (m < 1) throw std::invalid_argument("theorem_bound: m must be >= 1");
    return kernel.sup_norm_centered() / std::sqrt(static_cast<double>(m));
}

ErrorReport make_error_report(const FourierKernel& kernel, const PointSet& set, int grid) {
    require_same_dim(kernel, set);
    ErrorReport report;
    report.m = set.size();
    report.dim = set.dim();
    report.pair_energy = pair_energy_direct(kernel, set);
    report.spectral_energy = pair_energy_spectral(kernel, set);
    WceEstimate wce = wce_l1_class(kernel, set, grid);
    report.wce_grid = wce.value;
    report.grid_G = grid;
    report.wce_argmax = std::move(wce.argmax);
    report.cs_bound = cs_bound_from_energy(kernel.sup_norm_centered(), set.size(),
                                           report.spectral_energy);
    report.theorem_bound = theorem_bound(kernel, set.size());
    return report;
}

std::vector<std::string> report_violations(const ErrorReport& report, bool search_produced) {
    std::vector<std::string> out;
    if (report.spectral_energy < 0.0)
        out.push_back("spectral energy is negative: " + format_double(report.spectral_energy));
    double tol = 1e-9 * std::max(1.0, std::abs(report.pair_energy));
    if (std::abs(report.pair_energy - report.spectral_energy) > tol)
        out.push_back("pair energy identity violated: direct " +
                      format_double(report.pair_energy) + " vs spectral " +
                      format_double(report.spectral_energy));
    if (report.wce_grid > report.cs_bound * (1.0 + 1e-9))
        out.push_back("wce_grid " + format_double(report.wce_grid) +
                      " exceeds cs_bound " + format_double(report.cs_bound));
    if (search_produced && report.cs_bound > report.theorem_bound * (1.0 + 1e-12))
        out.push_back("cs_bound " + format_double(report.cs_bound) +
                      " exceeds theorem_bound " + format_double(report.theorem_bound));
    return out;
}

int default_analysis_grid(int dim) noexcept {
    switch (dim) {
        case 1: return 4096;
        case 2: return 128;
        case 3: return 24;
        default: return 8;
    }
}

} // namespace avgsearch
