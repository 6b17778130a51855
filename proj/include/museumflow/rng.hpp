#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "museumflow/errors.hpp"

namespace museumflow {

// All randomness in the library flows through this wrapper. std::mt19937_64
// is fully specified by the standard, but the std <random> distributions are
// not, so every distribution we need is spelled out here. Given the same seed
// and the same call sequence, any conforming platform produces the same
// stream, which is what the byte-stable output files rely on.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in [0, 1), 53 mantissa bits.
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Unbiased uniform integer in [0, n) via rejection.
    std::uint64_t uniform_below(std::uint64_t n) {
        if (n == 0) throw ParameterError("uniform_below: n must be positive");
        const std::uint64_t threshold = (0ULL - n) % n; // 2^64 mod n
        std::uint64_t x;
        do {
            x = engine_();
        } while (x < threshold);
        return x % n;
    }

    int uniform_int(int lo, int hi) { // inclusive bounds
        if (hi < lo) throw ParameterError("uniform_int: empty range");
        return lo + static_cast<int>(uniform_below(
                        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1));
    }

    bool bernoulli(double p) { return next_double() < p; }

    double exponential(double rate) {
        if (rate <= 0.0) throw ParameterError("exponential: rate must be positive");
        return -std::log(1.0 - next_double()) / rate;
    }

    // Box-Muller, no spare caching so the draw count per call is fixed.
    double normal(double mean, double stddev) {
        double u1;
        do {
            u1 = next_double();
        } while (u1 <= 0.0);
        const double u2 = next_double();
        const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793 * u2);
        return mean + stddev * z;
    }

    // Log-normal parameterized by its median; sigma 0 returns the median
    // exactly (exp(0) == 1), which several degenerate-dispersion contracts
    // depend on.
    double lognormal_median(double median, double sigma) {
        const double z = normal(0.0, 1.0);
        return median * std::exp(sigma * z);
    }

private:
    std::mt19937_64 engine_;
};

// Stream derivation: one master seed fans out into independent sub-streams
// (topology, styles, population, engine) via a SplitMix64 step.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + (stream + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace seed_stream {
constexpr std::uint64_t topology = 0;
constexpr std::uint64_t styles = 1;
constexpr std::uint64_t population = 2;
constexpr std::uint64_t engine = 3;
} // namespace seed_stream

} // namespace museumflow
