#pragma once

#include <cstdint>
#include <random>

namespace area {

// Thin wrapper around mt19937_64 with fixed output mappings.  The standard
// engine is bit-portable but the standard distributions are not, so the
// mappings are spelled out here to keep seeded runs identical everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform double in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform index in {0, ..., n-1}, unbiased via rejection.
    std::size_t index(std::size_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return static_cast<std::size_t>(v % n);
    }

    bool bernoulli(double p) { return uniform() < p; }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace area
