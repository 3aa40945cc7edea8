#pragma once

#include "hpl/gauges.hpp"
#include "hpl/geometry.hpp"

namespace hpl {

// E = { shape*u + center : |u| <= 1 }, shape symmetric positive definite.
struct Ellipsoid {
    Mat shape;
    Vec center;

    double volume() const;
};

// Maximal-volume inscribed ellipsoid: maximize log det B subject to
// ||B a_i|| <= b_i - <a_i, d> over all facets, via a log-barrier Newton
// scheme. Throws NotConverged (with the residual in the message) if the
// iteration cap is hit. A feasible warm start overrides the default
// inscribed-ball initialization.
Ellipsoid john_ellipsoid(const Polytope& p, const Ellipsoid* warm_start = nullptr);

// (Vol(P) / Vol(john_ellipsoid(P)))^{1/n}, in [1, n]
double volume_ratio(const Polytope& p);
double volume_ratio(const ConvexBodySpec& body);  // 1 for any ellipsoid

struct JohnTransform {
    Mat map;       // x -> map*x + shift sends the John ellipsoid to B_2^n
    Vec shift;
    Polytope image;
};
JohnTransform john_position_transform(const Polytope& p);

// (surface area, n * volume) for a body in John position; first <= second
std::pair<double, double> ball_surface_bound_check(const Polytope& p_in_john);

struct MinIsoResult {
    double value = 0;        // min over tried T of Vol(d(TP)) / Vol(TP)^{(n-1)/n}
    Mat transform;
    bool upper_bound_only = false;
};

// n=2: derivative-free search over the shear/stretch chart of SL_2 with
// restarts; n=3: John-position upper bound only.
MinIsoResult minimal_isoperimetric_ratio(const Polytope& p, int budget = 4000);

}  // namespace hpl
