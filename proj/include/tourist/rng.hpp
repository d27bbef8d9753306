#pragma once

#include <cstdint>

namespace tourist {

// Counter-based splitmix64 stream. Every draw is mix(state += gamma), so a
// stream is a pure function of (seed, draw index) and derived child streams
// stay reproducible no matter which thread consumes them. Bounded-int and
// double draws are implemented here instead of <random> distributions so that
// outputs do not depend on the standard library implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, n). Lemire's multiply-shift rejection, unbiased.
    std::uint64_t next_below(std::uint64_t n) {
        std::uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        auto low = static_cast<std::uint64_t>(m);
        if (low < n) {
            const std::uint64_t threshold = (0ULL - n) % n;
            while (low < threshold) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * n;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    bool next_bool() { return (next_u64() & 1u) != 0; }

    // Stable child-stream seed for (base, index); used to fan work items out
    // across threads without sharing generator state.
    static std::uint64_t derive(std::uint64_t base, std::uint64_t index) {
        return mix(base + 0x9E3779B97F4A7C15ULL * (index + 1));
    }

private:
    // Stafford mix13 finalizer.
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace tourist
