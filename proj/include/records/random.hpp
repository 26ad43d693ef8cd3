#pragma once

#include <cstdint>
#include <random>

namespace records {

// Seeded uniform stream. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard; each variate takes the top 53 bits
// of one engine output, so uniform() ∈ [0, 1) and 0 is attainable.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    double uniform()
    {
        ++draws_;
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::uint64_t seed() const noexcept { return seed_; }
    // Number of uniforms consumed so far.
    std::uint64_t draws() const noexcept { return draws_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::uint64_t draws_ = 0;
};

// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Seed for the index-th independent child run of a parent seed:
// mix64(mix64(seed) ^ index).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept
{
    return mix64(mix64(seed) ^ index);
}

} // namespace records
