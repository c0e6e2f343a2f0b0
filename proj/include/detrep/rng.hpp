#pragma once

#include <cstdint>

namespace detrep {

// splitmix64: tiny seeded generator for test-direction sampling. Each trial
// gets its own stream derived from (seed, trial), so results never depend
// on evaluation order or thread count.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    SplitMix64(std::uint64_t seed, std::uint64_t stream)
        : state_(mix(seed ^ mix(stream * 0x9E3779B97F4A7C15ull + 0x9E3779B97F4A7C15ull))) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    // Uniform-ish integer in [lo, hi] (modulo reduction; fine for sampling).
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace detrep
