#pragma once

#include <vector>

#include "hpl/gauges.hpp"
#include "hpl/geometry.hpp"

namespace hpl {

// g_{K,m}(x_bar) = Vol(K cap (x_1+K) cap ... cap (x_m+K)); 0 when empty.
double covariogram(const Polytope& k, const std::vector<Vec>& shifts);

struct RadialDerivative {
    double value = 0;
    double error_estimate = 0;
};

// One-sided derivative of r -> g_{K,m}(r theta_bar) at 0+, by polynomial
// extrapolation of one-sided difference quotients over r_seq (strictly
// decreasing). Equals -||theta_bar||_{Pi^{o,m} K}.
RadialDerivative radial_derivative(const Polytope& k, const DirectionTuple& theta,
                                   const std::vector<double>& r_seq = {1e-2, 5e-3, 2.5e-3});

}  // namespace hpl
