#pragma once

#include <vector>

#include "hpl/gauges.hpp"
#include "hpl/geometry.hpp"

namespace hpl {

// A compact convex summand described by hull generators. Lower-dimensional
// summands (segments, the hulls C_theta_bar) are first-class here.
struct Summand {
    std::vector<Vec> points;

    static Summand from_polytope(const Polytope& p) { return {p.vertices()}; }
    static Summand from_segment(const Segment& s) { return {{s.a, s.b}}; }
    static Summand point(const Vec& x) { return {{x}}; }
    // C_{-theta_bar} = conv{o, -theta_1, ..., -theta_m}
    static Summand neg_direction_hull(const DirectionTuple& theta);
};

// V_n(K_1,...,K_n) via the polarization identity
//   V = (1/n!) sum_{S nonempty} (-1)^{n+|S|} Vol(sum_{i in S} K_i).
// Symmetric, multilinear, translation invariant; V(K,...,K) = Vol(K).
double mixed_volume(const std::vector<Summand>& bodies);

// V_n(K[n-1], L) = (1/n) sum_j area_j h_L(u_j), exact for polytopes.
double mixed_volume_via_perturbation(const Polytope& k, const Summand& l);

// validation-only route: (Vol(K + eps L) - Vol(K)) / (n eps), O(eps) biased
double mixed_volume_finite_difference(const Polytope& k, const Summand& l, double eps);

// ||theta_bar||_{Pi^{o,m}(K_1,...,K_{n-1})} = n V_n(K_1,...,K_{n-1}, C_{-theta_bar})
double mixed_gauge(const std::vector<Polytope>& bodies, const DirectionTuple& theta);

// Reusable closure: caches the Minkowski sums not involving C_{-theta_bar},
// so star-volume sampling only hulls the theta-dependent subsets.
GaugeSpec make_mixed_gauge(const std::vector<Polytope>& bodies, int m);

// (V_n(K[n-1], M)^n, Vol(K)^{n-1} Vol(M)); first >= second always
std::pair<double, double> minkowski_first_check(const Polytope& k, const Polytope& m);

}  // namespace hpl
