#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hpl/geometry.hpp"
#include "hpl/mixed_volumes.hpp"
#include "hpl/random_bodies.hpp"
#include "hpl/rng.hpp"

using namespace hpl;

namespace {

Vec v2(double x, double y) {
    Vec v(2);
    v << x, y;
    return v;
}

Vec v3(double x, double y, double z) {
    Vec v(3);
    v << x, y, z;
    return v;
}

// Quasi-random membership oracle: fraction of a Halton sequence inside the
// halfspace representation, times the bounding-box volume. Independent of
// the facet-based volume formula.
double membership_volume(const Polytope& p, int samples) {
    const int n = p.dim();
    Vec lo = p.vertices().front(), hi = lo;
    for (const auto& v : p.vertices()) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
    }
    auto halton = [](int index, int base) {
        double f = 1.0, r = 0.0;
        while (index > 0) {
            f /= base;
            r += f * (index % base);
            index /= base;
        }
        return r;
    };
    const int primes[3] = {2, 3, 5};
    long long inside = 0;
    Vec x(n);
    for (int i = 1; i <= samples; ++i) {
        for (int k = 0; k < n; ++k)
            x[k] = lo[k] + (hi[k] - lo[k]) * halton(i, primes[k]);
        if (p.contains(x)) ++inside;
    }
    double box = 1.0;
    for (int k = 0; k < n; ++k) box *= hi[k] - lo[k];
    return box * static_cast<double>(inside) / samples;
}

}  // namespace

TEST_CASE("hull of the unit square") {
    const Polytope p = convex_hull({v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)});
    CHECK(p.vertices().size() == 4);
    CHECK(p.facets().size() == 4);
    for (const auto& f : p.facets()) CHECK(f.area == doctest::Approx(1.0));
    CHECK(p.volume() == doctest::Approx(1.0));
    p.validate();
}

TEST_CASE("hull drops interior and collinear points") {
    const Polytope p = convex_hull(
        {v2(0, 0), v2(1, 0), v2(0, 1), v2(0.5, 0.5), v2(0.5, 0), v2(0.25, 0.25)});
    CHECK(p.vertices().size() == 3);
    CHECK(p.volume() == doctest::Approx(0.5));
}

TEST_CASE("hull rejects degenerate input") {
    CHECK_THROWS_AS(convex_hull({v2(0, 0), v2(1, 1), v2(2, 2), v2(3, 3)}), DegenerateInput);
    CHECK_THROWS_AS(convex_hull({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(1, 1, 0)}),
                    DegenerateInput);
}

TEST_CASE("3d hulls: cube and simplex") {
    const Polytope cube = make_cube(3, 0.5);  // unit cube
    CHECK(cube.volume() == doctest::Approx(1.0));
    CHECK(cube.vertices().size() == 8);
    CHECK(cube.facets().size() == 6);
    CHECK(cube.surface_area() == doctest::Approx(6.0));
    cube.validate();

    const Polytope simplex = make_simplex(3);
    CHECK(simplex.volume() == doctest::Approx(1.0 / 6.0));
    CHECK(simplex.facets().size() == 4);
    simplex.validate();
}

TEST_CASE("random hulls satisfy representation duality") {
    SplitMix64 rng(12345);
    for (int n = 2; n <= 3; ++n) {
        for (int rep = 0; rep < 50; ++rep) {
            const Polytope p = random_polytope(n, 12, rng);
            p.validate();
            // membership agrees between representations on probe points
            for (int probe = 0; probe < 40; ++probe) {
                Vec x(n);
                for (int k = 0; k < n; ++k) x[k] = 3.0 * rng.next_unit() - 1.5;
                const bool in_h = p.contains(x);
                const double grown = hull_volume([&] {
                    auto pts = p.vertices();
                    pts.push_back(x);
                    return pts;
                }(), n);
                const bool in_v = grown <= p.volume() * (1 + 1e-9) + 1e-12;
                CHECK(in_h == in_v);
            }
        }
    }
}

TEST_CASE("hull of 50 random cube points passes invariants") {
    SplitMix64 rng(777);
    std::vector<Vec> pts;
    for (int i = 0; i < 50; ++i) {
        Vec v(3);
        for (int k = 0; k < 3; ++k) v[k] = 2.0 * rng.next_unit() - 1.0;
        pts.push_back(std::move(v));
    }
    const Polytope p = convex_hull(pts);
    p.validate();
    CHECK(p.volume() == doctest::Approx(membership_volume(p, 400000)).epsilon(0.005));
}

TEST_CASE("halfspace intersection") {
    auto hs = [](double nx, double ny, double b) {
        return Halfspace{v2(nx, ny), b};
    };
    SUBCASE("unit square") {
        const Polytope p = halfspace_intersection(
            {hs(1, 0, 1), hs(-1, 0, 0), hs(0, 1, 1), hs(0, -1, 0)});
        CHECK(p.volume() == doctest::Approx(1.0));
        CHECK(p.vertices().size() == 4);
    }
    SUBCASE("two overlapping squares clip to a rectangle") {
        std::vector<Halfspace> both = {hs(1, 0, 1), hs(-1, 0, 0), hs(0, 1, 1), hs(0, -1, 0),
                                       hs(1, 0, 1.5), hs(-1, 0, -0.5), hs(0, 1, 1),
                                       hs(0, -1, 0)};
        const Polytope p = halfspace_intersection(both);
        CHECK(p.volume() == doctest::Approx(0.5));
    }
    SUBCASE("inconsistent constraints are empty") {
        CHECK_THROWS_AS(halfspace_intersection({hs(1, 0, 0), hs(-1, 0, -1)}),
                        EmptyIntersection);
    }
    SUBCASE("unbounded strip is flagged") {
        CHECK_THROWS_AS(halfspace_intersection({hs(1, 0, 1), hs(-1, 0, 1)}), Unbounded);
    }
}

TEST_CASE("surface area measure") {
    const Polytope square = convex_hull({v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)});
    const FacetMeasure m = surface_area_measure(square);
    CHECK(m.atoms.size() == 4);
    CHECK(m.total() == doctest::Approx(4.0));
    CHECK(m.closedness_defect() < 1e-12);

    const Polytope big = linear_image(square, 2 * Mat::Identity(2, 2));
    for (const auto& a : surface_area_measure(big).atoms)
        CHECK(a.weight == doctest::Approx(2.0));

    CHECK(surface_area_measure(make_cube(3, 0.5)).total() == doctest::Approx(6.0));
}

TEST_CASE("measure closedness on random hulls") {
    SplitMix64 rng(4242);
    for (int rep = 0; rep < 30; ++rep) {
        const Polytope p = random_polytope(3, 14, rng);
        const FacetMeasure m = surface_area_measure(p);
        CHECK(m.closedness_defect() <= kEpsGeom * std::max(1.0, m.total()));
    }
}

TEST_CASE("minkowski sums") {
    const Polytope square = convex_hull({v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)});
    CHECK(minkowski_sum(square, square).volume() == doctest::Approx(4.0));
    CHECK(minkowski_sum(square, Segment{v2(0, 0), v2(1, 0)}).volume() ==
          doctest::Approx(2.0));
    // adding a single point translates, leaving the volume alone
    CHECK(minkowski_sum(square, Segment{v2(3, 4), v2(3, 4)}).volume() ==
          doctest::Approx(square.volume()));
}

TEST_CASE("volume of minkowski sums is polynomial in eps") {
    SplitMix64 rng(99);
    for (int n = 2; n <= 3; ++n) {
        const Polytope p = random_polytope(n, 9, rng);
        const Polytope q = random_polytope(n, 9, rng);
        // fit Vol(P + eps Q) at n+1 nodes, predict a fresh node
        std::vector<double> eps_nodes;
        for (int i = 0; i <= n; ++i) eps_nodes.push_back(0.25 + 0.25 * i);
        auto vol_at = [&](double e) {
            std::vector<Vec> scaled(q.vertices().size());
            for (size_t i = 0; i < scaled.size(); ++i) scaled[i] = e * q.vertices()[i];
            return hull_volume(minkowski_points(p.vertices(), scaled), n);
        };
        Mat vander(n + 1, n + 1);
        Vec rhs(n + 1);
        for (int r = 0; r <= n; ++r) {
            for (int c = 0; c <= n; ++c) vander(r, c) = std::pow(eps_nodes[r], c);
            rhs[r] = vol_at(eps_nodes[r]);
        }
        const Vec coef = vander.fullPivLu().solve(rhs);
        const double probe = 0.37;
        double predicted = 0;
        for (int c = 0; c <= n; ++c) predicted += coef[c] * std::pow(probe, c);
        CHECK(vol_at(probe) == doctest::Approx(predicted).epsilon(1e-8));
    }
}

TEST_CASE("surface area via minkowski limit") {
    const Polytope square = convex_hull({v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)});
    CHECK(surface_area_via_limit(square, 1e-3) == doctest::Approx(4.0).epsilon(0.01));
    CHECK(surface_area_via_limit(make_cube(3, 0.5), 1e-3) ==
          doctest::Approx(6.0).epsilon(0.01));
    // the approximating ball recovers its own perimeter
    const Polytope ball = ball_approx(2, 720);
    CHECK(surface_area_via_limit(ball, 1e-3) ==
          doctest::Approx(ball.surface_area()).epsilon(0.01));
}

TEST_CASE("shadows") {
    const Polytope square = convex_hull({v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)});
    CHECK(project_shadow(square, v2(1, 0)) == doctest::Approx(1.0));
    CHECK(project_shadow(square, v2(1, 1) / std::sqrt(2.0)) ==
          doctest::Approx(std::sqrt(2.0)));
    CHECK(project_shadow(make_cube(3, 0.5), v3(0, 0, 1)) == doctest::Approx(1.0));
}

TEST_CASE("shadow equals n * V(P[n-1], [-theta/2, theta/2])") {
    SplitMix64 rng(31415);
    for (int n = 2; n <= 3; ++n) {
        for (int rep = 0; rep < 10; ++rep) {
            const Polytope p = random_polytope(n, 10, rng);
            Vec theta(n);
            for (int k = 0; k < n; ++k) theta[k] = gaussian(rng);
            theta.normalize();
            std::vector<Summand> tuple(n - 1, Summand::from_polytope(p));
            tuple.push_back(Summand{{-0.5 * theta, 0.5 * theta}});
            const double mv = mixed_volume(tuple);
            CHECK(project_shadow(p, theta) == doctest::Approx(n * mv).epsilon(1e-8));
        }
    }
}

TEST_CASE("linear images and translations") {
    const Polytope square = convex_hull({v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)});
    CHECK(translate(square, v2(5, 5)).volume() == doctest::Approx(1.0));
    CHECK(linear_image(square, 2 * Mat::Identity(2, 2)).volume() == doctest::Approx(4.0));

    SplitMix64 rng(2024);
    for (int rep = 0; rep < 20; ++rep) {
        Mat a = random_gl(2, 10.0, rng);
        a /= std::sqrt(std::abs(a.determinant()));  // unit determinant
        CHECK(linear_image(square, a).volume() == doctest::Approx(1.0).epsilon(1e-9));
    }
    Mat singular(2, 2);
    singular << 1, 1, 1, 1;
    CHECK_THROWS_AS(linear_image(square, singular), SingularMatrix);
}

TEST_CASE("builtin bodies") {
    CHECK(make_cross_polytope(2).volume() == doctest::Approx(2.0));
    CHECK(make_cross_polytope(3).volume() == doctest::Approx(4.0 / 3.0));
    const Polytope kgon = make_regular_kgon(256);
    CHECK(kgon.volume() == doctest::Approx(std::numbers::pi).epsilon(1e-3));
    // level-2 icosphere hull volume, frozen from an independent qhull run
    CHECK(ball_approx(3, 2).volume() == doctest::Approx(4.047044679978851).epsilon(1e-9));
}
