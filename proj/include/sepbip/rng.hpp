#pragma once

#include <cstdint>

namespace sepbip {

// Counter-based randomness: every variate is a pure function of
// (seed, stream), so evaluation order and thread count never matter.
// stream ids are documented at each call site (e.g. vertex-pair rank
// for edge sampling, (point, trial) mix for experiment rows).

inline uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline uint64_t stream_u64(uint64_t seed, uint64_t stream) {
    return mix64(mix64(seed) ^ mix64(stream));
}

inline uint64_t stream_u64(uint64_t seed, uint64_t a, uint64_t b) {
    return stream_u64(stream_u64(seed, a), b);
}

// Sequential helper for heuristics: draws are stream_u64(seed, 0), (seed, 1), ...
class SeqRng {
public:
    explicit SeqRng(uint64_t seed) : seed_(seed) {}

    uint64_t next() { return stream_u64(seed_, counter_++); }

    // Unbiased uniform draw in [0, bound) by rejection.
    uint64_t below(uint64_t bound) {
        // largest multiple of bound that fits in 64 bits
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

private:
    uint64_t seed_;
    uint64_t counter_ = 0;
};

} // namespace sepbip
