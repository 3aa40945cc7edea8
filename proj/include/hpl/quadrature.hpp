#pragma once

#include <functional>
#include <vector>

#include "hpl/geometry.hpp"

namespace hpl {

// Fixed (non-adaptive) quadrature on S^{n-1}, so every run reproduces the
// same bits. Nodes are stored flat (node k at data()[k*dim .. k*dim+dim)).
struct SphereRule {
    int dim;
    std::vector<double> nodes;    // flat, unit vectors
    std::vector<double> weights;  // sum to the sphere's surface measure
    int count() const { return static_cast<int>(weights.size()); }
};

inline constexpr int kCircleNodes = 2048;   // n=2 trapezoid
inline constexpr int kIcosphereLevel = 5;   // n=3 centroid rule, 20480 cells

// Cached rule for n in {2,3}.
const SphereRule& sphere_rule(int dim);

// integral of f over S^{n-1}
double sphere_integral(int dim, const std::function<double(const Vec&)>& f);

}  // namespace hpl
