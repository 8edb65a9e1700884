#pragma once

#include <cstdint>

namespace critset {

/// SplitMix64 (Sebastiano Vigna's public-domain reference generator). Chosen
/// as the project-wide PRNG because its output is a pure function of the
/// 64-bit state, which makes every golden value and every search stream
/// reproducible across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0,1) from the top 53 bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform value in [0, bound) by rejection-free modulo (bias is
    /// negligible at the family sizes used here and keeps the draw sequence
    /// simple to document).
    uint64_t next_below(uint64_t bound) { return bound ? next() % bound : 0; }

    /// One finalizer round; used to derive independent stream seeds.
    static uint64_t scramble(uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

private:
    uint64_t state_;
};

} // namespace critset
