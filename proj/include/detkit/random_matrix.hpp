#pragma once

#include <cstdint>
#include <random>

#include "detkit/matrix.hpp"

namespace detkit {

// splitmix64 step; used to spread one master seed into independent streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t state = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    return splitmix64(state);
}

using Rng = std::mt19937_64;

// Integer in [lo, hi] by modulo reduction. The bias is negligible for the
// tiny ranges used here, and unlike uniform_int_distribution the draw
// sequence is identical across standard libraries.
inline int int_in(Rng& rng, int lo, int hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return lo + static_cast<int>(rng() % span);
}

inline int nonzero_int_in(Rng& rng, int lo, int hi) {
    int v;
    do {
        v = int_in(rng, lo, hi);
    } while (v == 0);
    return v;
}

// Integer-entry matrix filled row-major, entries uniform in [lo, hi].
RationalMatrix random_int_matrix(int order, int lo, int hi, Rng& rng);

} // namespace detkit
