#pragma once

#include <cstdint>

namespace votelab {

// All randomness in the project flows through xoshiro256** seeded via
// splitmix64, so identical seeds give identical streams on every platform
// (std::uniform_int_distribution makes no such promise).
//
// Stream splitting: trial i of a run with master seed s draws from a
// generator seeded with derive_seed(s, i).

inline uint64_t splitmix64_next(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline uint64_t derive_seed(uint64_t master, uint64_t index) {
    uint64_t s = master ^ (0x9E3779B97F4A7C15ULL * (index + 1));
    return splitmix64_next(s);
}

class Xoshiro256 {
public:
    explicit Xoshiro256(uint64_t seed) {
        for (auto& word : state_) word = splitmix64_next(seed);
    }

    uint64_t next() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Unbiased draw from [0, bound) by rejection.
    uint64_t uniform_below(uint64_t bound) {
        const uint64_t limit = (UINT64_MAX / bound) * bound;
        uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % bound;
    }

    bool coin() { return (next() >> 63) != 0; }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t state_[4];
};

}  // namespace votelab
