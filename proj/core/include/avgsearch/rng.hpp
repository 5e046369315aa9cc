#pragma once

#include <cstdint>

namespace avgsearch {

// SplitMix64 (Steele/Lea/Vigna reference algorithm): state advances by the
// 64-bit golden-ratio constant, output is the two-round mix of the state.
// Pure integer arithmetic, so a given seed reproduces the same stream on
// every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next_u64() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1), 53 random bits: (u >> 11) * 2^-53.
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

} // namespace avgsearch
