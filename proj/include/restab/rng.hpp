#pragma once

// Seeded random source shared by the sampler and the synthetic generator.
//
// Engine: std::mt19937_64. Independent streams (one per chain, one per
// synthetic match) are derived from (seed, stream_id) by two rounds of
// SplitMix64 over seed ^ (stream_id * golden-ratio constant), so a run with
// n_chains > 1 is reproducible chain by chain. Distribution code comes from
// Boost.Random, whose algorithms are fixed in the headers and therefore give
// the same sequences on every platform (unlike the <random> distributions).

#include <cstdint>
#include <random>

#include <boost/random/gamma_distribution.hpp>
#include <boost/random/normal_distribution.hpp>

namespace restab {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
        return Rng(splitmix64(splitmix64(seed ^ (stream_id * 0x9E3779B97F4A7C15ULL))));
    }

    // Uniform on the open interval (0, 1), 53-bit resolution.
    double uniform() {
        for (;;) {
            const double x = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
            if (x > 0.0) return x;
        }
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    bool bernoulli(double p) { return uniform() < p; }

    double normal(double mean = 0.0, double sd = 1.0) {
        return boost::random::normal_distribution<double>(mean, sd)(engine_);
    }

    // Gamma with the given shape and *rate* (mean shape / rate).
    double gamma(double shape, double rate) {
        return boost::random::gamma_distribution<double>(shape, 1.0 / rate)(engine_);
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace restab
