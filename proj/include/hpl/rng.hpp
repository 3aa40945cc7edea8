#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>

namespace hpl {

// splitmix64: tiny counter-friendly generator. Each call advances the state;
// mixing a (seed, counter) pair into the initial state gives an independent
// stream per counter, which is what makes chunked parallel sampling
// reproducible regardless of thread count.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in (0,1]; never returns 0 so logs are safe
    double next_unit() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }
};

inline uint64_t mix_seed(uint64_t seed, uint64_t salt) {
    SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ULL * (salt + 1)));
    g.next();
    return g.next();
}

// Uniform sampler on S^{d-1} via normalized Gaussians. Sample i is a pure
// function of (seed, i): identical (seed, position) -> identical sample.
class SphereSampler {
  public:
    SphereSampler(int dim, uint64_t seed) : dim_(dim), seed_(seed) {}

    int dim() const { return dim_; }
    uint64_t seed() const { return seed_; }

    // writes a unit vector into out[0..dim)
    void sample(uint64_t index, std::span<double> out) const {
        SplitMix64 g(mix_seed(seed_, index));
        double norm2 = 0.0;
        int k = 0;
        while (k < dim_) {
            // Box-Muller pair
            const double u1 = g.next_unit();
            const double u2 = g.next_unit();
            const double r = std::sqrt(-2.0 * std::log(u1));
            const double a = 2.0 * std::numbers::pi * u2;
            out[k] = r * std::cos(a);
            norm2 += out[k] * out[k];
            ++k;
            if (k < dim_) {
                out[k] = r * std::sin(a);
                norm2 += out[k] * out[k];
                ++k;
            }
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (int i = 0; i < dim_; ++i) out[i] *= inv;
    }

  private:
    int dim_;
    uint64_t seed_;
};

}  // namespace hpl
