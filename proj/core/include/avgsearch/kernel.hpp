#pragma once

#include <span>
#include <string>
#include <vector>

namespace avgsearch {

// Integer frequency vector of length d.
using FrequencyIndex = std::vector<int>;

struct SpectrumEntry {
    FrequencyIndex k;
    double coefficient;
};

enum class KernelStructure { ExplicitSpectrum, KorobovProduct };

std::string format_frequency(const FrequencyIndex& k);  // "(1,-2)"

// Real even 1-periodic function on [0,1)^d with a finitely supported Fourier
// spectrum: F(x) = mean + sum_{k != 0} c_k e^{2 pi i <k,x>}, c_{-k} = c_k.
// Only the canonical representative of each +-k pair is stored (first
// nonzero component positive); the mirror carries the same coefficient and
// is materialized on demand.  Immutable after construction, safe to share.
class FourierKernel {
public:
    // Tensor-product kernel: mean 1 and c_k = prod_{i: k_i != 0} |k_i|^-r on
    // the box [-K,K]^d.  All coefficients are positive, so the kernel is
    // admissible by construction.  Requires r > 1 and K >= 1.
    static FourierKernel korobov(int dim, double r, int K);

    // Kernel from an explicit coefficient list.  An entry may name either or
    // both of a +-k pair; mismatched pairs are recorded as evenness
    // violations rather than rejected, so admissibility_violations() can
    // report them.  Duplicate entries for the same k and k = 0 entries are
    // construction errors (the mean carries the zero frequency).
    static FourierKernel from_spectrum(int dim, double mean,
                                       const std::vector<SpectrumEntry>& entries);

    int dim() const noexcept { return dim_; }
    double mean() const noexcept { return mean_; }
    KernelStructure structure() const noexcept { return structure_; }
    double korobov_r() const noexcept { return r_; }
    int korobov_K() const noexcept { return K_; }

    // Canonical half-spectrum in lexicographic frequency order.
    const std::vector<SpectrumEntry>& half_spectrum() const noexcept { return spectrum_; }

    // Largest |k_i| appearing in the support (the truncation limit).
    int max_abs_frequency() const noexcept;

    // F0(x) = F(x) - mean = sum_{k != 0} c_k cos(2 pi <k,x>).  Coordinates
    // are reduced mod 1.  Korobov kernels use the per-coordinate
    // factorization prod_i (1 + 2 sum_k k^-r cos(2 pi k x_i)) - 1, which is
    // O(d K) instead of O((2K+1)^d).
    double centered(std::span<const double> x) const;

    // F0(x - y) without materializing the difference.
    double centered_diff(std::span<const double> x, std::span<const double> y) const;

    // Plain cosine sum over the stored spectrum; the cross-check path for
    // the factorized Korobov evaluation and the main path for explicit
    // kernels.
    double centered_from_spectrum(std::span<const double> x) const;

    // ||F0||_inf = F0(0) = sum_{k != 0} c_k, exact under nonnegative
    // coefficients.  Korobov kernels use (1 + 2 sum_k k^-r)^d - 1.
    double sup_norm_centered() const;

    // Empty iff the kernel meets every hypothesis the error guarantee needs:
    // real/even spectrum, finite values, c_k >= 0 off zero.  Each violation
    // names the offending frequency.
    std::vector<std::string> admissibility_violations() const;

    // Single-token summary, e.g. "korobov(d=2,r=2,K=8)"; used in provenance.
    std::string description() const;

private:
    FourierKernel() = default;

    double korobov_factor(double t) const noexcept;  // 1 + 2 sum_k k^-r cos(2 pi k t)

    int dim_ = 1;
    double mean_ = 0.0;
    KernelStructure structure_ = KernelStructure::ExplicitSpectrum;
    double r_ = 0.0;
    int K_ = 0;
    std::vector<double> korobov_coeff_;         // k^-r for k = 1..K
    std::vector<SpectrumEntry> spectrum_;       // canonical reps, lex order
    std::vector<std::string> structure_faults_; // evenness problems seen at construction
};

} // namespace avgsearch
