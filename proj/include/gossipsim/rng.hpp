#pragma once

#include <cstdint>
#include <random>

namespace gossipsim {

using Rng = std::mt19937_64;

// SplitMix64 mixing step; whitens seeds so that nearby inputs give
// unrelated engine states.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Deterministic seed for (stream, index) pairs derived from a base seed.
// Separate streams keep graph generation and simulation draws independent
// of each other and of the run index.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream,
                                    std::uint64_t index) {
    const std::uint64_t h = splitmix64(base ^ (0xA0761D6478BD642FULL * (stream + 1)));
    return splitmix64(h ^ (0xE7037ED1A0B428DBULL * (index + 1)));
}

namespace seed_stream {
inline constexpr std::uint64_t kGraph = 1;
inline constexpr std::uint64_t kSim = 2;
inline constexpr std::uint64_t kTable = 3;
}  // namespace seed_stream

inline Rng make_rng(std::uint64_t seed) { return Rng(splitmix64(seed)); }

// Uniform index in [0, n). n must be positive.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace gossipsim
