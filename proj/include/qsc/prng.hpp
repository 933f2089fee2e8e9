#pragma once

#include <cstdint>
#include <string>

namespace qsc {

/// Deterministic, platform-independent generator for parameter sampling.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t below(uint64_t bound) { return next() % bound; }
};

inline uint64_t fnv1a(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

/// Stream seed for one work item; independent of scheduling order.
inline uint64_t derive_seed(uint64_t seed, const std::string& tag, uint64_t a, uint64_t b, uint64_t c) {
    SplitMix64 g(seed ^ fnv1a(tag) ^ (a * 0x9e3779b97f4a7c15ull) ^ (b << 32) ^ c);
    return g.next();
}

}  // namespace qsc
