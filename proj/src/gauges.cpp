#include "hpl/gauges.hpp"

#include <cmath>

#include "hpl/monte_carlo.hpp"
#include "hpl/quadrature.hpp"

namespace hpl {

namespace {

// hot path shared by the polytope gauge and the ball quadrature:
// sum_j w_j * max_i <theta_i, u_j>_-  over flat arrays
double neg_support_sum(const double* dirs, const double* weights, int count, int n,
                       const double* blocks, int m) {
    double total = 0;
    for (int j = 0; j < count; ++j) {
        const double* u = dirs + static_cast<size_t>(j) * n;
        double best = 0;
        for (int i = 0; i < m; ++i) {
            const double* th = blocks + static_cast<size_t>(i) * n;
            double dot = 0;
            for (int k = 0; k < n; ++k) dot += th[k] * u[k];
            if (-dot > best) best = -dot;
        }
        total += weights[j] * best;
    }
    return total;
}

void require_nonzero(std::span<const double> theta) {
    for (double t : theta)
        if (t != 0) return;
    throw ZeroDirection("gauge of the zero direction");
}

}  // namespace

DirectionTuple DirectionTuple::from_blocks(const std::vector<Vec>& blocks) {
    if (blocks.empty()) throw DimensionMismatch("DirectionTuple: no blocks");
    const int n = static_cast<int>(blocks.front().size());
    DirectionTuple t(n, static_cast<int>(blocks.size()));
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].size() != n) throw DimensionMismatch("DirectionTuple: ragged blocks");
        t.set_block(static_cast<int>(i), blocks[i]);
    }
    return t;
}

// ------------------------------------------------------------- body spec

ConvexBodySpec ConvexBodySpec::from_polytope(Polytope p) {
    ConvexBodySpec b;
    b.dim_ = p.dim();
    b.polytope_ = std::make_shared<Polytope>(std::move(p));
    const auto& facets = b.polytope_->facets();
    b.atom_normals_.reserve(facets.size() * b.dim_);
    b.atom_weights_.reserve(facets.size());
    for (const auto& f : facets) {
        for (int k = 0; k < b.dim_; ++k) b.atom_normals_.push_back(f.normal[k]);
        b.atom_weights_.push_back(f.area);
    }
    return b;
}

ConvexBodySpec ConvexBodySpec::ball(int dim, double radius) {
    if (radius <= 0) throw DegenerateInput("ball radius must be positive");
    ConvexBodySpec b;
    b.dim_ = dim;
    b.radius_ = radius;
    b.transform_ = Mat::Identity(dim, dim);
    b.inv_transform_ = b.transform_;
    return b;
}

ConvexBodySpec ConvexBodySpec::transformed(const Mat& a, const Vec& shift) const {
    if (a.rows() != dim_ || a.cols() != dim_)
        throw DimensionMismatch("transformed: matrix shape");
    if (std::abs(a.determinant()) < 1e-12) throw SingularMatrix("transformed: singular map");
    if (is_polytope()) {
        return from_polytope(translate(linear_image(*polytope_, a), shift));
    }
    ConvexBodySpec b;
    b.dim_ = dim_;
    b.radius_ = radius_;
    b.transform_ = a * transform_;
    b.inv_transform_ = b.transform_.inverse();
    b.det_ = b.transform_.determinant();
    return b;
}

const Polytope& ConvexBodySpec::polytope() const {
    if (!polytope_) throw Error("body is not a polytope");
    return *polytope_;
}

double ConvexBodySpec::volume() const {
    if (is_polytope()) return polytope_->volume();
    return unit_ball_volume(dim_) * std::pow(radius_, dim_) * std::abs(det_);
}

double ConvexBodySpec::surface_area() const {
    if (is_polytope()) return polytope_->surface_area();
    if (!transform_.isIdentity(1e-14))
        throw Error("surface area of a transformed ball is not available");
    return dim_ * unit_ball_volume(dim_) * std::pow(radius_, dim_ - 1);
}

// ------------------------------------------------------------- gauges

double support_C(const DirectionTuple& theta, const Vec& v, HullSign sign) {
    double best = 0;
    for (int i = 0; i < theta.m; ++i) {
        const double dot = theta.flat.segment(i * theta.n, theta.n).dot(v);
        const double part = sign == HullSign::Negative ? -dot : dot;
        if (part > best) best = part;
    }
    return best;
}

double gauge_classic(const ConvexBodySpec& body, const Vec& theta) {
    require_nonzero({theta.data(), static_cast<size_t>(theta.size())});
    if (theta.size() != body.dim()) throw DimensionMismatch("gauge_classic: direction dim");
    if (body.is_polytope()) {
        const auto& w = body.atom_weights();
        const auto& u = body.atom_normals();
        const int n = body.dim();
        double total = 0;
        for (size_t j = 0; j < w.size(); ++j) {
            double dot = 0;
            for (int k = 0; k < n; ++k) dot += theta[k] * u[j * n + k];
            total += w[j] * std::abs(dot);
        }
        return 0.5 * total;
    }
    // shadow of a ball is omega_{n-1} r^{n-1}, pushed through the transform
    const int n = body.dim();
    const Vec pre = body.ball_transform().inverse() * theta;
    return std::abs(body.ball_transform().determinant()) *
           unit_ball_volume(n - 1) * std::pow(body.ball_radius(), n - 1) * pre.norm();
}

double gauge_m_order(const ConvexBodySpec& body, const DirectionTuple& theta) {
    require_nonzero({theta.flat.data(), static_cast<size_t>(theta.flat.size())});
    if (theta.n != body.dim()) throw DimensionMismatch("gauge_m_order: block dim");
    if (body.is_polytope()) {
        return neg_support_sum(body.atom_normals().data(), body.atom_weights().data(),
                               static_cast<int>(body.atom_weights().size()), theta.n,
                               theta.flat.data(), theta.m);
    }
    const int n = body.dim();
    // gauge_{A(rB)} = |det A| * r^{n-1} * int_S max_i <A^{-1}theta_i, u>_- du
    Vec pre(theta.flat.size());
    const Mat inv = body.ball_transform().inverse();
    for (int i = 0; i < theta.m; ++i)
        pre.segment(i * n, n) = inv * theta.flat.segment(i * n, n);
    const SphereRule& rule = sphere_rule(n);
    const double integral = neg_support_sum(rule.nodes.data(), rule.weights.data(),
                                            rule.count(), n, pre.data(), theta.m);
    return std::abs(body.ball_transform().determinant()) *
           std::pow(body.ball_radius(), n - 1) * integral;
}

double mean_width(int dim, const std::function<double(const Vec&)>& support) {
    return sphere_integral(dim, support) / (dim * unit_ball_volume(dim));
}

double gauge_of_ball_m_order(int n, int m, const DirectionTuple& theta) {
    require_nonzero({theta.flat.data(), static_cast<size_t>(theta.flat.size())});
    const SphereRule& rule = sphere_rule(n);
    return neg_support_sum(rule.nodes.data(), rule.weights.data(), rule.count(), n,
                           theta.flat.data(), m);
}

std::pair<double, double> rotate_body_gauge_check(const ConvexBodySpec& body,
                                                  const Mat& rotation,
                                                  const DirectionTuple& theta) {
    const int n = body.dim();
    if ((rotation.transpose() * rotation - Mat::Identity(n, n)).norm() > 1e-10)
        throw NotOrthogonal("rotate_body_gauge_check: matrix is not orthogonal");
    const ConvexBodySpec rotated = body.transformed(rotation, Vec::Zero(n));
    DirectionTuple pulled(theta.n, theta.m);
    for (int i = 0; i < theta.m; ++i)
        pulled.set_block(i, rotation.transpose() * theta.block(i));
    return {gauge_m_order(rotated, theta), gauge_m_order(body, pulled)};
}

// ------------------------------------------------------------- closures

GaugeSpec make_gauge_m_order(const ConvexBodySpec& body, int m) {
    const int n = body.dim();
    GaugeSpec g;
    g.dim = n * m;
    if (body.is_polytope()) {
        // capture flat copies; evaluation is allocation-free
        g.eval = [normals = body.atom_normals(), weights = body.atom_weights(), n,
                  m](std::span<const double> x) {
            return neg_support_sum(normals.data(), weights.data(),
                                   static_cast<int>(weights.size()), n, x.data(), m);
        };
        return g;
    }
    const Mat inv = body.ball_transform().inverse();
    const double factor = std::abs(body.ball_transform().determinant()) *
                          std::pow(body.ball_radius(), n - 1);
    const bool identity = body.ball_transform().isIdentity(1e-14);
    g.eval = [inv, factor, identity, n, m](std::span<const double> x) {
        const SphereRule& rule = sphere_rule(n);
        if (identity) {
            return factor * neg_support_sum(rule.nodes.data(), rule.weights.data(),
                                            rule.count(), n, x.data(), m);
        }
        Vec pre(n * m);
        for (int i = 0; i < m; ++i)
            pre.segment(i * n, n) =
                inv * Eigen::Map<const Vec>(x.data() + i * n, n);
        return factor * neg_support_sum(rule.nodes.data(), rule.weights.data(),
                                        rule.count(), n, pre.data(), m);
    };
    return g;
}

GaugeSpec make_euclidean_gauge(int dim) {
    GaugeSpec g;
    g.dim = dim;
    g.eval = [](std::span<const double> x) {
        double s = 0;
        for (double t : x) s += t * t;
        return std::sqrt(s);
    };
    return g;
}

GaugeSpec make_l1_gauge(int dim) {
    GaugeSpec g;
    g.dim = dim;
    g.eval = [](std::span<const double> x) {
        double s = 0;
        for (double t : x) s += std::abs(t);
        return s;
    };
    return g;
}

}  // namespace hpl
