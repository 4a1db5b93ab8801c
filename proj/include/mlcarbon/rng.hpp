#pragma once

// Deterministic random helpers. The standard distributions are
// implementation-defined, so sampling goes through these instead to keep
// seeded runs reproducible across compilers.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace mlcarbon {

inline std::mt19937_64 seeded_stream(std::uint64_t seed, std::uint64_t stream_id) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_id), static_cast<std::uint32_t>(stream_id >> 32)};
    return std::mt19937_64(seq);
}

// Uniform in [0, 1) with 53 bits of precision.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Standard normal via Box-Muller.
inline double normal01(std::mt19937_64& rng) {
    double u = uniform01(rng);
    while (u <= 0.0) {
        u = uniform01(rng);
    }
    const double v = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    return n == 0 ? 0 : rng() % n;
}

// Fisher-Yates with the helpers above; std::shuffle is not portable-stable.
template <typename T>
void deterministic_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(bounded(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

} // namespace mlcarbon
