#ifndef RESPOOL_RNG_HPP
#define RESPOOL_RNG_HPP

#include <cstdint>

namespace respool {

// SplitMix64. Fixed here (rather than std::mt19937) so that seeded runs
// are reproducible bit-for-bit independent of the standard library.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in (0, 1); 53-bit resolution, zero mapped to the smallest step.
    double next_unit() {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return u > 0.0 ? u : 0x1.0p-53;
    }
};

}  // namespace respool

#endif  // RESPOOL_RNG_HPP
