#include "avgsearch/kernel.hpp"

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>

#include "avgsearch/compensated.hpp"
#include "avgsearch/errors.hpp"
#include "avgsearch/numfmt.hpp"
#include "avgsearch/torus.hpp"

namespace avgsearch {

namespace {

// Largest spectrum we are willing to materialize: (2K+1)^d entries.
constexpr std::size_t max_spectrum_box = std::size_t{1} << 22;

bool is_canonical(const FrequencyIndex& k) noexcept {
    for (int c : k) {
        if (c > 0) return true;
        if (c < 0) return false;
    }
    return false;  // zero vector is not canonical
}

FrequencyIndex mirrored(const FrequencyIndex& k) {
    FrequencyIndex out(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) out[i] = -k[i];
    return out;
}

} // namespace

std::string format_frequency(const FrequencyIndex& k) {
    std::string out = "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(k[i]);
    }
    out += ')';
    return out;
}

FourierKernel FourierKernel::korobov(int dim, double r, int K) {
    if (dim < 1) throw std::invalid_argument("korobov kernel: dim must be >= 1");
    if (!(r > 1.0)) throw std::invalid_argument("korobov kernel: r must be > 1");
    if (K < 1) throw std::invalid_argument("korobov kernel: K must be >= 1");

    double box = std::pow(2.0 * K + 1.0, dim);
    if (box > static_cast<double>(max_spectrum_box))
        throw std::invalid_argument("korobov kernel: spectrum box (2K+1)^d too large");

    FourierKernel kernel;
    kernel.dim_ = dim;
    kernel.mean_ = 1.0;
    kernel.structure_ = KernelStructure::KorobovProduct;
    kernel.r_ = r;
    kernel.K_ = K;
    kernel.korobov_coeff_.resize(static_cast<std::size_t>(K));
    for (int k = 1; k <= K; ++k)
        kernel.korobov_coeff_[static_cast<std::size_t>(k - 1)] =
            std::pow(static_cast<double>(k), -r);

    // Enumerate the box lexicographically and keep the canonical half.
    FrequencyIndex k(static_cast<std::size_t>(dim), -K);
    for (;;) {
        if (is_canonical(k)) {
            double coeff = 1.0;
            for (int c : k)
                if (c != 0) coeff *= kernel.korobov_coeff_[static_cast<std::size_t>(std::abs(c) - 1)];
            kernel.spectrum_.push_back({k, coeff});
        }
        int i = dim - 1;
        while (i >= 0 && k[static_cast<std::size_t>(i)] == K) {
            k[static_cast<std::size_t>(i)] = -K;
            --i;
        }
        if (i < 0) break;
        ++k[static_cast<std::size_t>(i)];
    }
    return kernel;
}

FourierKernel FourierKernel::from_spectrum(int dim, double mean,
                                           const std::vector<SpectrumEntry>& entries) {
    if (dim < 1) throw std::invalid_argument("explicit kernel: dim must be >= 1");

    FourierKernel kernel;
    kernel.dim_ = dim;
    kernel.mean_ = mean;
    kernel.structure_ = KernelStructure::ExplicitSpectrum;

    struct Pair {
        std::optional<double> plus;   // value given at the canonical rep
        std::optional<double> minus;  // value given at the mirror
    };
    std::map<FrequencyIndex, Pair> pairs;  // lex-ordered by vector comparison

    for (const auto& entry : entries) {
        if (entry.k.size() != static_cast<std::size_t>(dim))
            throw DimensionMismatch("explicit kernel: frequency " + format_frequency(entry.k) +
                                    " has wrong length for dim " + std::to_string(dim));
        bool all_zero = true;
        for (int c : entry.k)
            if (c != 0) { all_zero = false; break; }
        if (all_zero)
            throw std::invalid_argument("explicit kernel: k = 0 belongs in the mean, not the spectrum");
        bool canonical = is_canonical(entry.k);
        FrequencyIndex rep = canonical ? entry.k : mirrored(entry.k);
        auto& pair = pairs[rep];
        auto& slot = canonical ? pair.plus : pair.minus;
        if (slot.has_value())
            throw std::invalid_argument("explicit kernel: duplicate entry at k = " +
                                        format_frequency(entry.k));
        slot = entry.coefficient;
    }

    for (const auto& [rep, pair] : pairs) {
        double coeff;
        if (pair.plus && pair.minus) {
            if (*pair.plus != *pair.minus)
                kernel.structure_faults_.push_back("evenness violation at k = " +
                                                   format_frequency(rep));
            coeff = *pair.plus;
        } else {
            coeff = pair.plus ? *pair.plus : *pair.minus;
        }
        kernel.spectrum_.push_back({rep, coeff});
    }
    return kernel;
}

int FourierKernel::max_abs_frequency() const noexcept {
    if (structure_ == KernelStructure::KorobovProduct) return K_;
    int best = 0;
    for (const auto& entry : spectrum_)
        for (int c : entry.k)
            if (std::abs(c) > best) best = std::abs(c);
    return best;
}

double FourierKernel::korobov_factor(double t) const noexcept {
    double s = 0.0;
    for (int k = 1; k <= K_; ++k)
        s += korobov_coeff_[static_cast<std::size_t>(k - 1)] *
             std::cos(two_pi * reduce_unit(static_cast<double>(k) * t));
    return 1.0 + 2.0 * s;
}

double FourierKernel::centered(std::span<const double> x) const {
    if (x.size() != static_cast<std::size_t>(dim_))
        throw DimensionMismatch("kernel evaluation: point has wrong dimension");
    if (structure_ == KernelStructure::KorobovProduct) {
        double prod = 1.0;
        for (int i = 0; i < dim_; ++i)
            prod *= korobov_factor(reduce_unit(x[static_cast<std::size_t>(i)]));
        return prod - mean_;
    }
    return centered_from_spectrum(x);
}

double FourierKernel::centered_diff(std::span<const double> x,
                                    std::span<const double> y) const {
    if (x.size() != static_cast<std::size_t>(dim_) || y.size() != x.size())
        throw DimensionMismatch("kernel evaluation: point has wrong dimension");
    if (structure_ == KernelStructure::KorobovProduct) {
        double prod = 1.0;
        for (int i = 0; i < dim_; ++i) {
            auto u = static_cast<std::size_t>(i);
            prod *= korobov_factor(reduce_unit(x[u] - y[u]));
        }
        return prod - mean_;
    }
    double acc = 0.0;
    for (const auto& entry : spectrum_) {
        double dot = 0.0;
        for (int i = 0; i < dim_; ++i) {
            auto u = static_cast<std::size_t>(i);
            dot += entry.k[u] * reduce_unit(x[u] - y[u]);
        }
        acc += entry.coefficient * std::cos(two_pi * reduce_unit(dot));
    }
    return 2.0 * acc;
}

double FourierKernel::centered_from_spectrum(std::span<const double> x) const {
    if (x.size() != static_cast<std::size_t>(dim_))
        throw DimensionMismatch("kernel evaluation: point has wrong dimension");
    double acc = 0.0;
    for (const auto& entry : spectrum_) {
        double dot = 0.0;
        for (int i = 0; i < dim_; ++i) {
            auto u = static_cast<std::size_t>(i);
            dot += entry.k[u] * reduce_unit(x[u]);
        }
        acc += entry.coefficient * std::cos(two_pi * reduce_unit(dot));
    }
    return 2.0 * acc;
}

double FourierKernel::sup_norm_centered() const {
    if (structure_ == KernelStructure::KorobovProduct) {
        CompensatedSum s;
        for (double c : korobov_coeff_) s.add(c);
        double factor = 1.0 + 2.0 * s.value();
        double prod = 1.0;
        for (int i = 0; i < dim_; ++i) prod *= factor;
        return prod - 1.0;
    }
    CompensatedSum s;
    for (const auto& entry : spectrum_) s.add(entry.coefficient);
    return 2.0 * s.value();
}

std::vector<std::string> FourierKernel::admissibility_violations() const {
    std::vector<std::string> out = structure_faults_;
    if (!std::isfinite(mean_)) out.push_back("non-finite mean");
    for (const auto& entry : spectrum_) {
        if (!std::isfinite(entry.coefficient))
            out.push_back("non-finite coefficient at k = " + format_frequency(entry.k));
        else if (entry.coefficient < 0.0)
            out.push_back("negative coefficient at k = " + format_frequency(entry.k));
    }
    return out;
}

std::string FourierKernel::description() const {
    if (structure_ == KernelStructure::KorobovProduct)
        return "korobov(d=" + std::to_string(dim_) + ",r=" + format_double(r_) +
               ",K=" + std::to_string(K_) + ")";
    return "explicit(d=" + std::to_string(dim_) +
           ",terms=" + std::to_string(spectrum_.size()) + ")";
}

} // namespace avgsearch
