#include "hpl/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace hpl {

namespace {

SphereRule circle_rule(int count) {
    SphereRule rule;
    rule.dim = 2;
    rule.nodes.resize(2 * count);
    rule.weights.assign(count, 2.0 * std::numbers::pi / count);
    for (int k = 0; k < count; ++k) {
        const double a = 2.0 * std::numbers::pi * k / count;
        rule.nodes[2 * k] = std::cos(a);
        rule.nodes[2 * k + 1] = std::sin(a);
    }
    return rule;
}

// centroid rule on an icosphere: node at each spherical triangle's
// normalized centroid, weight its spherical area (Van Oosterom-Strackee)
SphereRule icosphere_rule(int level) {
    const TriMesh mesh = icosphere(level);
    SphereRule rule;
    rule.dim = 3;
    rule.nodes.reserve(3 * mesh.faces.size());
    rule.weights.reserve(mesh.faces.size());
    for (const auto& [ia, ib, ic] : mesh.faces) {
        const Eigen::Vector3d& a = mesh.vertices[ia];
        const Eigen::Vector3d& b = mesh.vertices[ib];
        const Eigen::Vector3d& c = mesh.vertices[ic];
        const double num = std::abs(a.dot(b.cross(c)));
        const double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
        rule.weights.push_back(2.0 * std::atan2(num, den));
        const Eigen::Vector3d mid = (a + b + c).normalized();
        rule.nodes.insert(rule.nodes.end(), {mid[0], mid[1], mid[2]});
    }
    return rule;
}

}  // namespace

const SphereRule& sphere_rule(int dim) {
    if (dim == 2) {
        static const SphereRule rule = circle_rule(kCircleNodes);
        return rule;
    }
    if (dim == 3) {
        static const SphereRule rule = icosphere_rule(kIcosphereLevel);
        return rule;
    }
    throw DimensionMismatch("sphere_rule: only n in {2,3}");
}

double sphere_integral(int dim, const std::function<double(const Vec&)>& f) {
    const SphereRule& rule = sphere_rule(dim);
    double acc = 0;
    Vec v(dim);
    for (int k = 0; k < rule.count(); ++k) {
        for (int i = 0; i < dim; ++i) v[i] = rule.nodes[k * dim + i];
        acc += rule.weights[k] * f(v);
    }
    return acc;
}

}  // namespace hpl
