#pragma once

#include <cmath>
#include <cstdint>

// Pinned deterministic RNG. Every sampled value in the pipeline flows through
// this generator, so outputs are reproducible bit-for-bit for a fixed seed
// regardless of platform or standard library. std::* distributions are
// deliberately not used: their streams are implementation-defined.

namespace cracksim {

inline constexpr std::uint64_t kSeedGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer (Vigna). Used for seeding and for deriving child seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Child-seed derivation: derive_seed(base, tag) = mix64(base + (tag+1)*golden).
// Tags: dataset samples use their index; render stages use the constants below.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
    return mix64(base + (tag + 1) * kSeedGolden);
}

enum SeedTag : std::uint64_t {
    kSeedTagFractal = 1,
    kSeedTagPlacement = 2,
    kSeedTagBeta = 3,
    kSeedTagTexture = 4,
};

// xoshiro256++ (Blackman & Vigna), seeded from splitmix64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) {
            x += kSeedGolden;
            word = mix64(x);
        }
    }

    std::uint64_t next_u64() {
        auto rotl = [](std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
        std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1), 53-bit mantissa.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi], inclusive. Widening-multiply range reduction.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t r = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * span) >> 64);
        return lo + static_cast<std::int64_t>(r);
    }

    // Box-Muller, cosine branch only: consumes exactly two raw draws per call.
    double normal(double mu, double sigma) {
        double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
        double u2 = uniform();
        return mu + sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kRngPi * u2);
    }

private:
    static constexpr double kRngPi = 3.14159265358979323846;
    std::uint64_t state_[4];
};

}  // namespace cracksim
