#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

namespace avgsearch {

inline constexpr double two_pi = 6.283185307179586476925286766559;

// Reduce to [0,1).  t - floor(t) can round up to exactly 1.0 for tiny
// negative t, hence the guard.
inline double reduce_unit(double t) noexcept {
    double f = t - std::floor(t);
    if (f >= 1.0) f -= 1.0;
    return f;
}

// Number of points in the uniform grid {0, 1/G, ..., (G-1)/G}^d; rejects
// grids past 2^26 points.
inline std::size_t unit_grid_size(int dim, int resolution) {
    if (dim < 1 || resolution < 1)
        throw std::invalid_argument("unit grid: dim and resolution must be >= 1");
    constexpr std::size_t limit = std::size_t{1} << 26;
    std::size_t n = 1;
    for (int i = 0; i < dim; ++i) {
        n *= static_cast<std::size_t>(resolution);
        if (n > limit)
            throw std::invalid_argument("unit grid: more than 2^26 points");
    }
    return n;
}

// index -> grid point, lexicographic order (first coordinate most
// significant).
inline void unit_grid_point(std::size_t index, int dim, int resolution,
                            std::span<double> out) noexcept {
    auto res = static_cast<std::size_t>(resolution);
    for (int i = dim - 1; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] =
            static_cast<double>(index % res) / static_cast<double>(resolution);
        index /= res;
    }
}

} // namespace avgsearch
