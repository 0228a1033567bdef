#pragma once

#include <cstdint>

namespace mahjong {

// Portable deterministic generators. Output is fixed by the seed on every
// platform, so logs replay bit-for-bit anywhere.

constexpr std::uint64_t splitmix64_step(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// xoshiro256** seeded via splitmix64 (Blackman/Vigna).
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        for (auto& w : s_) w = splitmix64_step(seed);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Unbiased integer in [0, bound) via rejection sampling.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

// Seed-splitting rule for independent parallel units of work: child i of a
// master seed gets a splitmix64 hash of (master, i). Documented so batch
// results are citable by master seed alone.
constexpr std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t state = master ^ (0x9E3779B97F4A7C15ULL * (index + 1));
    std::uint64_t a = splitmix64_step(state);
    std::uint64_t b = splitmix64_step(state);
    return a ^ (b << 1 | b >> 63);
}

}  // namespace mahjong
