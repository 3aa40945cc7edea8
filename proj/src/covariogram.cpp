#include "hpl/covariogram.hpp"

#include <cmath>

namespace hpl {

double covariogram(const Polytope& k, const std::vector<Vec>& shifts) {
    std::vector<Halfspace> hs = k.halfspaces();
    hs.reserve(hs.size() * (shifts.size() + 1));
    for (const auto& x : shifts) {
        if (x.size() != k.dim()) throw DimensionMismatch("covariogram: shift dimension");
        for (const auto& h : k.halfspaces())
            hs.push_back({h.normal, h.offset + h.normal.dot(x)});
    }
    double reach = k.scale();
    for (const auto& x : shifts) reach = std::max(reach, k.scale() + x.norm());
    try {
        return halfspace_intersection(hs, 16.0 * reach + 16.0).volume();
    } catch (const EmptyIntersection&) {
        return 0.0;
    }
}

RadialDerivative radial_derivative(const Polytope& k, const DirectionTuple& theta,
                                   const std::vector<double>& r_seq) {
    if (theta.norm() == 0) throw ZeroDirection("radial_derivative: zero direction");
    if (r_seq.size() < 2) throw ConfigError("radial_derivative: need at least 2 steps");
    for (size_t i = 1; i < r_seq.size(); ++i)
        if (!(r_seq[i] < r_seq[i - 1]) || r_seq[i] <= 0)
            throw ConfigError("radial_derivative: r sequence must be positive decreasing");

    const double g0 = k.volume();
    std::vector<double> quotients(r_seq.size());
    for (size_t j = 0; j < r_seq.size(); ++j) {
        std::vector<Vec> shifts(theta.m);
        for (int i = 0; i < theta.m; ++i) shifts[i] = r_seq[j] * theta.block(i);
        const double g = covariogram(k, shifts);
        if (j == 0 && g == 0.0)
            throw StepTooLarge("radial_derivative: covariogram vanishes at largest step");
        quotients[j] = (g - g0) / r_seq[j];
    }

    // Neville extrapolation of the quotients to r = 0. Near 0 the
    // covariogram is polynomial in r of degree <= n, so with n steps the
    // extrapolated value is exact up to roundoff.
    std::vector<double> tab = quotients;
    double prev = tab.back();
    for (size_t level = 1; level < tab.size(); ++level) {
        for (size_t j = 0; j + level < tab.size(); ++j) {
            const double r_lo = r_seq[j + level], r_hi = r_seq[j];
            tab[j] = (r_hi * tab[j + 1] - r_lo * tab[j]) / (r_hi - r_lo);
        }
        tab.resize(tab.size() - 1);
        if (level + 1 < quotients.size()) prev = tab.front();
    }
    RadialDerivative out;
    out.value = tab.front();
    out.error_estimate = std::abs(tab.front() - prev);
    return out;
}

}  // namespace hpl
