#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace eua {

// splitmix64, used as the seed-derivation mixer so that any nested run
// (suite -> case -> repeat -> b0) can be re-derived in isolation.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Thin RNG wrapper. Distributions are hand-rolled on top of mt19937_64 so
// the draw sequence is stable regardless of standard library version.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix_seed(seed, 0)) {}

    // uniform in [0, 1)
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // uniform integer in [lo, hi], inclusive
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        // rejection sampling to avoid modulo bias
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    double next_real(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // one categorical draw over a probability row; falls back to the last
    // index if rounding leaves residual mass
    int categorical(std::span<const double> probs) {
        double u = next_double();
        for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
            if (u < probs[i]) return static_cast<int>(i);
            u -= probs[i];
        }
        return static_cast<int>(probs.size()) - 1;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace eua
