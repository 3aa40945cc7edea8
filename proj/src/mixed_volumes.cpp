#include "hpl/mixed_volumes.hpp"

#include <bit>
#include <cmath>
#include <memory>

namespace hpl {

namespace {

double factorial(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

int check_dims(const std::vector<Summand>& bodies) {
    if (bodies.empty()) throw DimensionMismatch("mixed_volume: no summands");
    if (bodies.front().points.empty()) throw DegenerateInput("mixed_volume: empty summand");
    const int n = static_cast<int>(bodies.front().points.front().size());
    if (n > 3) throw TooHighDimension("mixed_volume: n > 3");
    if (n < 2) throw DimensionMismatch("mixed_volume: n < 2");
    for (const auto& b : bodies) {
        if (b.points.empty()) throw DegenerateInput("mixed_volume: empty summand");
        for (const auto& p : b.points)
            if (p.size() != n) throw DimensionMismatch("mixed_volume: mixed dimensions");
    }
    return n;
}

double support(const std::vector<Vec>& points, const Vec& u) {
    double best = points.front().dot(u);
    for (const auto& p : points) best = std::max(best, p.dot(u));
    return best;
}

}  // namespace

Summand Summand::neg_direction_hull(const DirectionTuple& theta) {
    Summand s;
    s.points.reserve(theta.m + 1);
    s.points.push_back(Vec::Zero(theta.n));
    for (int i = 0; i < theta.m; ++i) s.points.push_back(-theta.block(i));
    return s;
}

double mixed_volume(const std::vector<Summand>& bodies) {
    const int n = check_dims(bodies);
    if (static_cast<int>(bodies.size()) != n)
        throw DimensionMismatch("mixed_volume: need exactly n summands");

    double acc = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<Vec> cloud;
        for (int i = 0; i < n; ++i) {
            if (!(mask >> i & 1)) continue;
            cloud = cloud.empty() ? bodies[i].points : minkowski_points(cloud, bodies[i].points);
        }
        const int sign = ((n + std::popcount(mask)) % 2 == 0) ? 1 : -1;
        acc += sign * hull_volume(cloud, n);
    }
    return acc / factorial(n);
}

double mixed_volume_via_perturbation(const Polytope& k, const Summand& l) {
    const int n = k.dim();
    double acc = 0;
    for (const auto& f : k.facets()) acc += f.area * support(l.points, f.normal);
    return acc / n;
}

double mixed_volume_finite_difference(const Polytope& k, const Summand& l, double eps) {
    const int n = k.dim();
    std::vector<Vec> scaled(l.points.size());
    for (size_t i = 0; i < scaled.size(); ++i) scaled[i] = eps * l.points[i];
    const double grown = hull_volume(minkowski_points(k.vertices(), scaled), n);
    return (grown - k.volume()) / (n * eps);
}

double mixed_gauge(const std::vector<Polytope>& bodies, const DirectionTuple& theta) {
    if (theta.norm() == 0) throw ZeroDirection("mixed_gauge: zero direction");
    const int n = theta.n;
    if (static_cast<int>(bodies.size()) != n - 1)
        throw DimensionMismatch("mixed_gauge: need n-1 bodies");
    std::vector<Summand> tuple;
    tuple.reserve(n);
    for (const auto& b : bodies) tuple.push_back(Summand::from_polytope(b));
    tuple.push_back(Summand::neg_direction_hull(theta));
    return n * mixed_volume(tuple);
}

GaugeSpec make_mixed_gauge(const std::vector<Polytope>& bodies, int m) {
    if (bodies.empty()) throw DimensionMismatch("make_mixed_gauge: no bodies");
    const int n = bodies.front().dim();
    if (static_cast<int>(bodies.size()) != n - 1)
        throw DimensionMismatch("make_mixed_gauge: need n-1 bodies");
    if (n > 3) throw TooHighDimension("make_mixed_gauge: n > 3");

    // cache sum clouds and volumes of the theta-free subsets
    const unsigned nsub = 1u << (n - 1);
    auto clouds = std::make_shared<std::vector<std::vector<Vec>>>(nsub);
    auto vols = std::make_shared<std::vector<double>>(nsub, 0.0);
    for (unsigned mask = 1; mask < nsub; ++mask) {
        std::vector<Vec> cloud;
        for (int i = 0; i < n - 1; ++i) {
            if (!(mask >> i & 1)) continue;
            cloud = cloud.empty() ? bodies[i].vertices() : minkowski_points(cloud, bodies[i].vertices());
        }
        (*vols)[mask] = hull_volume(cloud, n);
        (*clouds)[mask] = std::move(cloud);
    }

    const double nfac = factorial(n);
    GaugeSpec g;
    g.dim = n * m;
    g.eval = [clouds, vols, n, m, nfac](std::span<const double> x) {
        std::vector<Vec> cpts;
        cpts.reserve(m + 1);
        cpts.push_back(Vec::Zero(n));
        for (int i = 0; i < m; ++i) {
            Vec v(n);
            for (int k = 0; k < n; ++k) v[k] = -x[i * n + k];
            cpts.push_back(std::move(v));
        }
        const unsigned nsub = 1u << (n - 1);
        double acc = 0;
        for (unsigned mask = 0; mask < 2 * nsub; ++mask) {
            const bool with_c = mask >= nsub;
            const unsigned sub = mask & (nsub - 1);
            if (!with_c && sub == 0) continue;
            double vol;
            if (!with_c) {
                vol = (*vols)[sub];
            } else if (sub == 0) {
                vol = hull_volume(cpts, n);
            } else {
                vol = hull_volume(minkowski_points((*clouds)[sub], cpts), n);
            }
            const int size = std::popcount(sub) + (with_c ? 1 : 0);
            acc += (((n + size) % 2 == 0) ? 1.0 : -1.0) * vol;
        }
        return n * acc / nfac;
    };
    return g;
}

std::pair<double, double> minkowski_first_check(const Polytope& k, const Polytope& m) {
    const int n = k.dim();
    std::vector<Summand> tuple(n - 1, Summand::from_polytope(k));
    tuple.push_back(Summand::from_polytope(m));
    const double mv = mixed_volume(tuple);
    return {std::pow(mv, n), std::pow(k.volume(), n - 1) * m.volume()};
}

}  // namespace hpl
