#pragma once

#include <cstdint>
#include <random>

namespace pilq {

// splitmix64 finalizer. Used to derive independent substream seeds from a
// master seed, so every component of a run draws from its own stream.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// All randomness flows through this wrapper. The generator is mt19937_64,
// whose output sequence is fixed by the C++ standard, and the value
// mappings below are explicit bit manipulations rather than
// std::*_distribution (whose outputs vary across standard libraries).
// Together this makes every seeded draw reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1), 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1].
    double uniform_open01() { return 1.0 - uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    // Uniform integer in [0, bound), rejection sampled.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace pilq
