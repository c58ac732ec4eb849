#pragma once

#include <cstdint>

namespace mingreedy {

/// Portable 64-bit PRNG (SplitMix64). Traces and generated instances must
/// reproduce bit-for-bit across platforms and implementations, so the update
/// rule is fixed here rather than delegated to <random>:
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, bound). bound must be > 0. Plain modulo; the
    /// bias is irrelevant at the bounds used here (all far below 2^32).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Bernoulli draw with probability percent/100.
    bool chance(unsigned percent) { return below(100) < percent; }

private:
    std::uint64_t state_;
};

} // namespace mingreedy
