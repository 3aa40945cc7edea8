#pragma once

#include <cstdint>

#include "hpl/gauges.hpp"

namespace hpl {

// Monte Carlo estimate with a 95% normal confidence interval. Identical
// (seed, samples) inputs reproduce identical bits, independent of the
// worker thread count.
struct EstimateCI {
    double mean = 0;
    double std_error = 0;
    long long samples = 0;
    uint64_t seed = 0;
    double ci_lo = 0;
    double ci_hi = 0;

    static EstimateCI from_moments(double mean, double std_error, long long samples,
                                   uint64_t seed);
    EstimateCI scaled(double factor) const;
};

// omega_d = pi^{d/2} / Gamma(d/2 + 1)
double unit_ball_volume(int d);

// 1e5 samples for nm <= 6, 4e5 for nm in {8, 9}
long long default_samples(int nm);

// Vol_d(M) = omega_d * E[ ||Theta||_M^{-d} ], Theta uniform on S^{d-1}
EstimateCI star_volume(const GaugeSpec& gauge, long long samples, uint64_t seed);

// Two star-volume integrands evaluated on common random numbers, with the
// delta-method standard error of the ratio of the two estimates.
struct PairedEstimate {
    EstimateCI first;
    EstimateCI second;
    double ratio = 0;
    double ratio_sigma = 0;
};
PairedEstimate star_volume_pair(const GaugeSpec& a, const GaugeSpec& b,
                                long long samples, uint64_t seed);

// E[ W_n(C_Theta_bar)^{-nm} ], Theta_bar uniform on S^{nm-1}; the inner
// mean width uses the fixed sphere rule, not nested sampling.
EstimateCI mean_width_constant(int n, int m, long long samples, uint64_t seed);

// omega_{nm} / (n^{nm} omega_n^m) * E[ W_n(C_Theta_bar)^{-nm} ]
EstimateCI petty_upper_constant(int n, int m, long long samples, uint64_t seed);

// binom(nm+n, n) / n^{nm}
double zhang_lower_constant(int n, int m);

}  // namespace hpl
