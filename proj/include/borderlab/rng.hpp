#pragma once

#include <cstdint>

namespace borderlab {

// Deterministic 64-bit generator (splitmix64).  Used for coefficient draws so
// that (seed, index order) fully pins a generated ideal across platforms;
// std::uniform_int_distribution is implementation-defined and would not.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform draw from {-1, 0, 1}; rejection keeps it exactly uniform.
    int ternary() {
        constexpr std::uint64_t limit = (~0ull / 3) * 3;
        for (;;) {
            std::uint64_t u = next();
            if (u < limit) return static_cast<int>(u % 3) - 1;
        }
    }

    // Draw from {0, 1} with P(1) = p.
    int bernoulli(double p) {
        if (p <= 0.0) return 0;
        if (p >= 1.0) return 1;
        auto threshold = static_cast<std::uint64_t>(p * 18446744073709551616.0);
        return next() < threshold ? 1 : 0;
    }

private:
    std::uint64_t state_;
};

}  // namespace borderlab
