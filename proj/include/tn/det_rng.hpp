#pragma once

#include <cstdint>
#include <span>
#include <vector>

// Deterministic randomness used wherever reproducibility is contractual
// (null-model trials, betweenness pivots, synthetic fixtures). The std::
// distributions are implementation-defined, so all draws go through the
// fixed transforms below.

namespace tn {

struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// Independent sub-stream for trial/pivot `stream` of a top-level seed.
inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
    SplitMix64 s(seed ^ (stream + 1) * 0xD1B54A32D192ED03ULL);
    s.next();
    return s.next();
}

// Unbiased draw from [0, n) by rejection.
inline uint64_t bounded(SplitMix64& rng, uint64_t n) {
    if (n <= 1) return 0;
    const uint64_t threshold = (0 - n) % n;
    for (;;) {
        uint64_t r = rng.next();
        if (r >= threshold) return r % n;
    }
}

// Uniform double in [0, 1).
inline double uniform01(SplitMix64& rng) {
    return static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
}

// k distinct values drawn uniformly from `pool`, returned ascending.
// Partial Fisher-Yates on a copy; k must not exceed pool size.
std::vector<uint32_t> sample_distinct(SplitMix64& rng, std::vector<uint32_t> pool, uint32_t k);

} // namespace tn
