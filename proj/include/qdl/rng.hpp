#pragma once

#include <cstdint>
#include <random>

// Deterministic randomness helpers. All randomized code in the library draws
// through these so that a (seed, call-sequence) pair reproduces bit-identical
// results on every platform. std::uniform_int_distribution is avoided on
// purpose: its output sequence is implementation-defined.

namespace qdl {

// One step of the splitmix64 generator; also used as a keyed hash so that
// per-trial generators can be derived from (seed, counter) without sharing
// state across threads.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Unbiased draw from [0, n) via rejection on the low-range residue.
template <class Gen>
std::uint64_t bounded(Gen& gen, std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
        std::uint64_t r = gen();
        if (r >= threshold) return r % n;
    }
}

// Small stateful generator for counter-derived streams (one per trial):
// the canonical sequential form of splitmix64.
class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}
    std::uint64_t operator()() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

}  // namespace qdl
