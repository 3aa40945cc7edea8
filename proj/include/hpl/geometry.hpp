#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "hpl/errors.hpp"

namespace hpl {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Geometric coincidence tolerance (coplanarity, dedup, representation checks).
inline constexpr double kEpsGeom = 1e-9;
// Below this volume an intersection counts as empty / lower-dimensional.
inline constexpr double kEpsVol = 1e-12;

struct Halfspace {
    Vec normal;     // unit outward
    double offset;  // body subset of { x : <normal, x> <= offset }
};

struct Facet {
    Vec normal;  // unit outward
    double area; // (n-1)-volume
    std::vector<int> vertex_ids;
};

struct Segment {
    Vec a, b;
};

// Discrete surface area measure: one atom per facet.
struct FacetMeasure {
    struct Atom {
        Vec normal;
        double weight;
    };
    std::vector<Atom> atoms;

    double total() const;
    // || sum_j w_j u_j ||, zero for a closed measure
    double closedness_defect() const;
};

// Convex body in R^n (n in {2,3}) carrying synchronized V- and H-
// representations plus facet data. Immutable after construction.
class Polytope {
  public:
    int dim() const { return dim_; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
    const std::vector<Facet>& facets() const { return facets_; }

    double volume() const { return volume_; }
    double surface_area() const;
    // vertex centroid; strictly interior for a full-dimensional body
    Vec interior_point() const;
    // max vertex coordinate magnitude, used to scale tolerances
    double scale() const { return scale_; }

    bool contains(const Vec& x, double tol = kEpsGeom) const;

    // Checks vertex/halfspace duality, facet tightness and measure
    // closedness; throws DegenerateInput on violation.
    void validate() const;

    // Construction goes through convex_hull / halfspace_intersection.
    static Polytope from_parts(int dim, std::vector<Vec> vertices,
                               std::vector<Halfspace> halfspaces,
                               std::vector<Facet> facets);

  private:
    Polytope() = default;
    int dim_ = 0;
    std::vector<Vec> vertices_;
    std::vector<Halfspace> halfspaces_;
    std::vector<Facet> facets_;
    double volume_ = 0.0;
    double scale_ = 0.0;
};

// Hull of a full-dimensional point set. 2D: monotone chain; 3D: incremental
// insertion with coplanar-facet merging. Throws DegenerateInput if the
// points do not affinely span R^n.
Polytope convex_hull(const std::vector<Vec>& points);

// Volume of the hull without assembling facet data; 0 if the points are
// lower-dimensional. Hot path for mixed-volume polarization.
double hull_volume(const std::vector<Vec>& points, int dim);

// Pairwise sums of two generator clouds, deduplicated; hull(out) is the
// Minkowski sum of the two hulls.
std::vector<Vec> minkowski_points(const std::vector<Vec>& a, const std::vector<Vec>& b);

// Vertex enumeration of a bounded intersection. bound_hint is the radius of
// a sanity box; a vertex landing on it means the input was unbounded.
Polytope halfspace_intersection(const std::vector<Halfspace>& halfspaces,
                                double bound_hint = 1e6);

FacetMeasure surface_area_measure(const Polytope& p);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope minkowski_sum(const Polytope& p, const Segment& s);

// (Vol(P + eps*Bt) - Vol(P)) / eps with Bt a fine polytopal ball
// (720-gon in 2D, icosphere level 4 in 3D).
double surface_area_via_limit(const Polytope& p, double eps);

// (n-1)-volume of the orthogonal projection of P onto theta^perp.
double project_shadow(const Polytope& p, const Vec& theta);

Polytope linear_image(const Polytope& p, const Mat& a);
Polytope translate(const Polytope& p, const Vec& x);

// Regular k-gon (n=2, ignores level) or icosphere (n=3) with unit radius.
Polytope ball_approx(int dim, int resolution);

// Unit icosphere mesh, shared by ball_approx and the sphere quadrature.
struct TriMesh {
    std::vector<Eigen::Vector3d> vertices;
    std::vector<std::array<int, 3>> faces;
};
TriMesh icosphere(int level);

// Convenience builders used by the catalog and tests.
Polytope make_cube(int dim, double half_side = 1.0);
Polytope make_simplex(int dim);        // hull{o, e_1, ..., e_n}
Polytope make_cross_polytope(int dim); // unit l1 ball
Polytope make_regular_kgon(int k, double radius = 1.0);

}  // namespace hpl
