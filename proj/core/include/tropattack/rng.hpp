#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "tropattack/errors.hpp"

namespace tropattack {

// splitmix64 step; used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic generator: mt19937_64 (bit-identical across platforms by
// the C++ standard) with rejection-sampled bounded draws, so sequences do
// not depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Independent stream seed for a (seed, a, b) triple.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
        std::uint64_t s = splitmix64(seed);
        s = splitmix64(s ^ a);
        s = splitmix64(s ^ b);
        return s;
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [lo, hi], inclusive, via unbiased rejection.
    long long uniform_int(long long lo, long long hi) {
        if (lo > hi) throw InputError("uniform_int: empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
        if (span == std::numeric_limits<std::uint64_t>::max()) {
            return static_cast<long long>(next_u64());
        }
        std::uint64_t bound = span + 1;
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
        std::uint64_t draw = next_u64();
        while (draw > limit) draw = next_u64();
        return lo + static_cast<long long>(draw % bound);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace tropattack
