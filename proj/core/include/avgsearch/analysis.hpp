#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "avgsearch/compensated.hpp"
#include "avgsearch/kernel.hpp"
#include "avgsearch/pointset.hpp"

namespace avgsearch {

// Q(X_m, k) = (1/m) sum_j e^{2 pi i <k, xi^j>}; |Q| measures equidistribution
// at frequency k.  k = 0 gives exactly 1.
std::complex<double> exp_sum(const PointSet& set, const FrequencyIndex& k);

// E = sum_{j,n=1}^m F0(xi^n - xi^j), evaluated as the diagonal m*F0(0) plus
// twice the upper triangle.  O(m^2) kernel evaluations; the cross-check
// route for the spectral energy.
double pair_energy_direct(const FourierKernel& kernel, const PointSet& set);

// The same quantity through the spectrum: m^2 sum_{k != 0} c_k |Q(X_m,k)|^2,
// summed over the canonical half-spectrum in lexicographic order with the
// mirror folded in.  A sum of nonnegative terms, so it cannot cancel; this
// is the canonical energy behind the bounds.
double pair_energy_spectral(const FourierKernel& kernel, const PointSet& set);

// (1/m) sum_j f(xi^j): the equal-weight cubature value of f.
template <class F>
double qmc_evaluate(F&& f, const PointSet& set) {
    CompensatedSum acc;
    for (std::size_t j = 0; j < set.size(); ++j) acc.add(f(set.point(j)));
    return acc.value() / static_cast<double>(set.size());
}

// |(1/m) sum_j F0(xi^j - y0)|: the integration error on the class's extreme
// representer f = F0(. - y0), whose exact integral is 0.
double integration_error(const FourierKernel& kernel, const PointSet& set,
                         std::span<const double> y0);

struct WceEstimate {
    double value;                // max over the grid; a lower estimate of the sup
    std::vector<double> argmax;  // first maximizing grid point in lex order
    int grid;                    // G
};

// Grid estimate of the worst-case error over the unit-ball convolution
// class: max_y |(1/m) sum_j F0(xi^j - y)| over the uniform G^d grid.
// G >= 2K+1 recommended so the grid resolves the spectrum.
WceEstimate wce_l1_class(const FourierKernel& kernel, const PointSet& set, int grid);

// Sup norm of the frequency-weighted error function of the formula,
// g(x) = sum_{k != 0} Q(X_m,k) c_k e^{2 pi i <k,x>}.  For even kernels this
// equals the worst-case class error, so it is the same computation as
// wce_l1_class; kept under its own name.
WceEstimate g_sup_norm(const FourierKernel& kernel, const PointSet& set, int grid);

// ||F0||_inf^{1/2} * m^-1 * E^{1/2} with E = pair_energy_spectral.
// E within [-1e-9, 0) clamps to 0; below that throws NegativeEnergy.
double cs_bound(const FourierKernel& kernel, const PointSet& set);

// ||F0||_inf * m^{-1/2}: the guaranteed worst-case error of both search
// constructions.
double theorem_bound(const FourierKernel& kernel, std::size_t m);

struct ErrorReport {
    std::size_t m = 0;
    int dim = 0;
    double pair_energy = 0.0;      // direct double sum
    double spectral_energy = 0.0;  // spectral identity value
    double wce_grid = 0.0;
    int grid_G = 0;
    std::vector<double> wce_argmax;
    double cs_bound = 0.0;
    double theorem_bound = 0.0;
};

ErrorReport make_error_report(const FourierKernel& kernel, const PointSet& set, int grid);

// Internal-consistency violations of a report: spectral positivity, the
// direct/spectral identity to 1e-9 relative, wce <= cs_bound.  The
// cs_bound <= theorem_bound comparison holds only for sets produced by the
// search algorithms (a clustered set keeps cs_bound at ||F0||_inf), so it is
// gated on `search_produced`.
std::vector<std::string> report_violations(const ErrorReport& report, bool search_produced);

// wce scan resolution per coordinate when none is given: 4096 / 128 / 24 for
// d = 1 / 2 / 3, 8 beyond.
int default_analysis_grid(int dim) noexcept;

} // namespace avgsearch
