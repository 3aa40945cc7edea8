#include "hpl/random_bodies.hpp"

#include <cmath>
#include <numbers>

namespace hpl {

double gaussian(SplitMix64& g) {
    const double u1 = g.next_unit();
    const double u2 = g.next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Mat random_orthogonal(int n, SplitMix64& g) {
    Mat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = gaussian(g);
    Eigen::HouseholderQR<Mat> qr(a);
    Mat q = qr.householderQ();
    const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i)
        if (r(i, i) < 0) q.col(i) *= -1;
    return q;
}

Mat random_gl(int n, double cond_cap, SplitMix64& g) {
    const Mat o1 = random_orthogonal(n, g);
    const Mat o2 = random_orthogonal(n, g);
    const double half = 0.5 * std::log(cond_cap);
    Vec s(n);
    for (int i = 0; i < n; ++i) s[i] = std::exp((2.0 * g.next_unit() - 1.0) * half);
    // overall scale decoupled from the condition number
    const double scale = std::exp((2.0 * g.next_unit() - 1.0) * std::numbers::ln2);
    return scale * o1 * s.asDiagonal() * o2.transpose();
}

Polytope random_polytope(int n, int k, SplitMix64& g) {
    std::vector<Vec> pts;
    pts.reserve(k);
    for (int i = 0; i < k; ++i) {
        Vec v(n);
        double norm2 = 0;
        for (int j = 0; j < n; ++j) {
            v[j] = gaussian(g);
            norm2 += v[j] * v[j];
        }
        const double r = (0.6 + 0.4 * g.next_unit()) / std::sqrt(norm2);
        pts.push_back(r * v);
    }
    // simplex around the origin keeps the hull full-dimensional
    for (int j = 0; j < n; ++j) {
        Vec e = Vec::Zero(n);
        e[j] = 0.35;
        pts.push_back(e);
        e[j] = -0.35;
        pts.push_back(std::move(e));
    }
    return convex_hull(pts);
}

DirectionTuple random_direction_tuple(int n, int m, SplitMix64& g) {
    DirectionTuple t(n, m);
    double norm2 = 0;
    for (int i = 0; i < n * m; ++i) {
        t.flat[i] = gaussian(g);
        norm2 += t.flat[i] * t.flat[i];
    }
    t.flat /= std::sqrt(norm2);
    return t;
}

}  // namespace hpl
