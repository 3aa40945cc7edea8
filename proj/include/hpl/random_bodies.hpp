#pragma once

#include "hpl/gauges.hpp"
#include "hpl/geometry.hpp"
#include "hpl/rng.hpp"

namespace hpl {

double gaussian(SplitMix64& g);

// Haar-ish orthogonal matrix via QR of a Gaussian matrix.
Mat random_orthogonal(int n, SplitMix64& g);

// random GL_n element with condition number <= cond_cap
Mat random_gl(int n, double cond_cap, SplitMix64& g);

// hull of k points sampled on a jittered sphere; always full-dimensional
Polytope random_polytope(int n, int k, SplitMix64& g);

// random unit direction tuple in R^{nm}
DirectionTuple random_direction_tuple(int n, int m, SplitMix64& g);

}  // namespace hpl
