#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "hpl/geometry.hpp"

namespace hpl {

// theta_bar = (theta_1, ..., theta_m), m blocks of R^n stored as one
// nm-vector.
struct DirectionTuple {
    int n = 0;
    int m = 0;
    Vec flat;

    DirectionTuple(int n_, int m_) : n(n_), m(m_), flat(Vec::Zero(n_ * m_)) {}
    DirectionTuple(int n_, int m_, Vec flat_) : n(n_), m(m_), flat(std::move(flat_)) {
        if (flat.size() != n * m) throw DimensionMismatch("DirectionTuple: flat size != n*m");
    }
    static DirectionTuple from_blocks(const std::vector<Vec>& blocks);

    Vec block(int i) const { return flat.segment(i * n, n); }
    void set_block(int i, const Vec& v) { flat.segment(i * n, n) = v; }
    double norm() const { return flat.norm(); }
};

// Positive 1-homogeneous gauge on R^dim, evaluated on raw coordinates so
// Monte Carlo loops stay allocation-free.
struct GaugeSpec {
    int dim = 0;
    std::function<double(std::span<const double>)> eval;

    double operator()(std::span<const double> x) const { return eval(x); }
    double operator()(const Vec& x) const {
        return eval(std::span<const double>(x.data(), static_cast<size_t>(x.size())));
    }
};

// A convex body the gauge machinery can integrate against: either a
// polytope (exact atom sums) or a Euclidean ball, optionally carried
// through a linear map (which is how ellipsoids enter).
class ConvexBodySpec {
  public:
    static ConvexBodySpec from_polytope(Polytope p);
    static ConvexBodySpec ball(int dim, double radius);

    // affine image A*K + shift (shift is irrelevant to projection bodies)
    ConvexBodySpec transformed(const Mat& a, const Vec& shift) const;

    int dim() const { return dim_; }
    bool is_polytope() const { return polytope_ != nullptr; }
    const Polytope& polytope() const;
    double ball_radius() const { return radius_; }
    const Mat& ball_transform() const { return transform_; }

    double volume() const;
    double surface_area() const;  // throws for a transformed ball

    // flat facet atoms (polytope only): normals rows of size n
    const std::vector<double>& atom_normals() const { return atom_normals_; }
    const std::vector<double>& atom_weights() const { return atom_weights_; }

  private:
    int dim_ = 0;
    std::shared_ptr<const Polytope> polytope_;
    double radius_ = 0;
    Mat transform_;      // identity unless transformed()
    Mat inv_transform_;
    double det_ = 1.0;
    std::vector<double> atom_normals_;
    std::vector<double> atom_weights_;
};

enum class HullSign { Positive, Negative };

// h_{C_{theta_bar}}(v)  = max(0, max_i <theta_i, v>)   (Positive)
// h_{C_{-theta_bar}}(v) = max_i <theta_i, v>_-         (Negative)
double support_C(const DirectionTuple& theta, const Vec& v, HullSign sign);

// ||theta||_{Pi^o K} = (1/2) int |<theta,u>| dsigma_K
double gauge_classic(const ConvexBodySpec& body, const Vec& theta);

// ||theta_bar||_{Pi^{o,m} K} = int max_i <theta_i,u>_- dsigma_K
double gauge_m_order(const ConvexBodySpec& body, const DirectionTuple& theta);

// mean width of a convex set given by its support function
double mean_width(int dim, const std::function<double(const Vec&)>& support);

// gauge of Pi^{o,m} of the unit ball: n*omega_n*W_n(C_{-theta_bar})
double gauge_of_ball_m_order(int n, int m, const DirectionTuple& theta);

// evaluates (gauge(O*K, theta_bar), gauge(K, (O^T theta_i)_i)); the two
// agree for any orthogonal O
std::pair<double, double> rotate_body_gauge_check(const ConvexBodySpec& body,
                                                  const Mat& rotation,
                                                  const DirectionTuple& theta);

// gauge closures for the Monte Carlo layer
GaugeSpec make_gauge_m_order(const ConvexBodySpec& body, int m);
GaugeSpec make_euclidean_gauge(int dim);
GaugeSpec make_l1_gauge(int dim);

}  // namespace hpl
