// rng.hpp
//
// SplitMix64 (Steele, Lea & Flood, "Fast splittable pseudorandom number
// generators", OOPSLA 2014). Chosen over <random> engines+distributions
// because its output is pinned bit-for-bit by the reference algorithm on
// every platform, which is what makes random graph streams reproducible.

#ifndef CRITIND_RNG_HPP
#define CRITIND_RNG_HPP

#include <cstdint>

namespace critind {

struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0,1) with 53 random bits
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace critind

#endif
