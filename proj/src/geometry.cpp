#include "hpl/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <unordered_map>

namespace hpl {

namespace {

double cloud_scale(const std::vector<Vec>& pts) {
    double s = 1.0;
    for (const auto& p : pts) s = std::max(s, p.cwiseAbs().maxCoeff());
    return s;
}

std::vector<Vec> dedup_points(std::vector<Vec> pts, double tol) {
    std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
        for (int i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    });
    std::vector<Vec> out;
    for (auto& p : pts) {
        bool dup = false;
        for (auto it = out.rbegin(); it != out.rend(); ++it) {
            if ((*it - p).cwiseAbs().maxCoeff() <= tol) {
                dup = true;
                break;
            }
            if (p[0] - (*it)[0] > tol) break;  // sorted by x: no earlier match possible
        }
        if (!dup) out.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------- 2D hull

// CCW hull indices via Andrew's monotone chain; collinear points dropped.
std::vector<int> hull2_indices(const std::vector<Vec>& pts, double scale) {
    const double eps_area = kEpsGeom * scale * scale;
    std::vector<int> idx(pts.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (pts[a][0] != pts[b][0]) return pts[a][0] < pts[b][0];
        return pts[a][1] < pts[b][1];
    });
    auto cross = [&](int o, int a, int b) {
        return (pts[a][0] - pts[o][0]) * (pts[b][1] - pts[o][1]) -
               (pts[a][1] - pts[o][1]) * (pts[b][0] - pts[o][0]);
    };
    const int n = static_cast<int>(idx.size());
    std::vector<int> h(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], idx[i]) <= eps_area) --k;
        h[k++] = idx[i];
    }
    for (int i = n - 2, lower = k + 1; i >= 0; --i) {
        while (k >= lower && cross(h[k - 2], h[k - 1], idx[i]) <= eps_area) --k;
        h[k++] = idx[i];
    }
    h.resize(k - 1);
    return h;
}

// ---------------------------------------------------------------- 3D hull

using V3 = Eigen::Vector3d;

struct Tri {
    int a, b, c;
    V3 normal;
    double offset;
    bool alive = true;
};

struct Hull3 {
    std::vector<V3> pts;
    std::vector<Tri> tris;
    double scale = 1.0;
};

uint64_t edge_key(int u, int v) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) |
           static_cast<uint32_t>(v);
}

// Incremental hull: strictly visible faces are removed and the horizon is
// re-fanned to the new point; faces coplanar with the point are absorbed
// into the visible region only when adjacent to it, which keeps horizons
// clean on flat inputs (Minkowski sums, grid points).
Hull3 build_hull3(const std::vector<V3>& pts, double scale) {
    const double eps = kEpsGeom * scale;
    if (pts.size() < 4) throw DegenerateInput("convex_hull: fewer than 4 distinct points");

    // initial simplex from spread-out points
    size_t i0 = 0;
    for (size_t i = 1; i < pts.size(); ++i)
        if (pts[i][0] < pts[i0][0] || (pts[i][0] == pts[i0][0] && pts[i][1] < pts[i0][1]))
            i0 = i;
    size_t i1 = i0;
    double best = -1;
    for (size_t i = 0; i < pts.size(); ++i) {
        double d = (pts[i] - pts[i0]).norm();
        if (d > best) best = d, i1 = i;
    }
    if (best <= eps) throw DegenerateInput("convex_hull: points coincide");
    size_t i2 = i0;
    best = -1;
    const V3 dir = (pts[i1] - pts[i0]).normalized();
    for (size_t i = 0; i < pts.size(); ++i) {
        const V3 r = pts[i] - pts[i0];
        double d = (r - dir * dir.dot(r)).norm();
        if (d > best) best = d, i2 = i;
    }
    if (best <= eps) throw DegenerateInput("convex_hull: points are collinear");
    size_t i3 = i0;
    best = -1;
    const V3 nrm0 = (pts[i1] - pts[i0]).cross(pts[i2] - pts[i0]).normalized();
    for (size_t i = 0; i < pts.size(); ++i) {
        double d = std::abs(nrm0.dot(pts[i] - pts[i0]));
        if (d > best) best = d, i3 = i;
    }
    if (best <= eps) throw DegenerateInput("convex_hull: points are coplanar");

    Hull3 hull;
    hull.pts = pts;
    hull.scale = scale;
    const V3 inner =
        (pts[i0] + pts[i1] + pts[i2] + pts[i3]) / 4.0;

    std::unordered_map<uint64_t, int> edge_owner;
    auto add_face = [&](int a, int b, int c) {
        V3 n = (hull.pts[b] - hull.pts[a]).cross(hull.pts[c] - hull.pts[a]);
        const double len = n.norm();
        if (len <= 0) throw DegenerateInput("convex_hull: degenerate face");
        n /= len;
        double off = n.dot(hull.pts[a]);
        if (n.dot(inner) > off) {
            std::swap(b, c);
            n = -n;
            off = -off;
        }
        const int id = static_cast<int>(hull.tris.size());
        hull.tris.push_back({a, b, c, n, off, true});
        const bool fresh = edge_owner.emplace(edge_key(a, b), id).second &&
                           edge_owner.emplace(edge_key(b, c), id).second &&
                           edge_owner.emplace(edge_key(c, a), id).second;
        if (!fresh) throw Error("convex_hull: non-simple horizon");
        return id;
    };
    auto drop_face = [&](int id) {
        Tri& t = hull.tris[id];
        t.alive = false;
        edge_owner.erase(edge_key(t.a, t.b));
        edge_owner.erase(edge_key(t.b, t.c));
        edge_owner.erase(edge_key(t.c, t.a));
    };
    size_t alive_count = 4;
    auto compact = [&]() {
        std::vector<Tri> kept;
        kept.reserve(alive_count);
        for (const auto& t : hull.tris)
            if (t.alive) kept.push_back(t);
        hull.tris = std::move(kept);
        edge_owner.clear();
        for (size_t f = 0; f < hull.tris.size(); ++f) {
            const Tri& t = hull.tris[f];
            edge_owner[edge_key(t.a, t.b)] = static_cast<int>(f);
            edge_owner[edge_key(t.b, t.c)] = static_cast<int>(f);
            edge_owner[edge_key(t.c, t.a)] = static_cast<int>(f);
        }
    };

    const std::array<int, 4> base = {static_cast<int>(i0), static_cast<int>(i1),
                                     static_cast<int>(i2), static_cast<int>(i3)};
    add_face(base[0], base[1], base[2]);
    add_face(base[0], base[1], base[3]);
    add_face(base[0], base[2], base[3]);
    add_face(base[1], base[2], base[3]);

    // far-to-near insertion settles the gross shape before marginal points,
    // which keeps visibility decisions on flat inputs well conditioned
    std::vector<size_t> order;
    order.reserve(pts.size());
    for (size_t pi = 0; pi < pts.size(); ++pi)
        if (pi != i0 && pi != i1 && pi != i2 && pi != i3) order.push_back(pi);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        const double da = (pts[a] - inner).squaredNorm();
        const double db = (pts[b] - inner).squaredNorm();
        if (da != db) return da > db;
        return a < b;
    });

    std::vector<int> visible, stack;
    std::vector<std::pair<int, int>> horizon;
    std::vector<uint32_t> mark;
    uint32_t epoch = 0;
    for (size_t pi : order) {
        const int p = static_cast<int>(pi);

        if (hull.tris.size() > 4 * alive_count + 64) compact();
        mark.resize(hull.tris.size() + 8, epoch);
        ++epoch;

        visible.clear();
        stack.clear();
        for (size_t f = 0; f < hull.tris.size(); ++f) {
            const Tri& t = hull.tris[f];
            if (!t.alive) continue;
            if (t.normal.dot(pts[pi]) - t.offset > eps) {
                stack.push_back(static_cast<int>(f));
                mark[f] = epoch;
            }
        }
        if (stack.empty()) continue;  // inside or on the surface

        // grow visible region, absorbing adjacent coplanar faces
        while (!stack.empty()) {
            const int f = stack.back();
            stack.pop_back();
            visible.push_back(f);
            const Tri& t = hull.tris[f];
            const std::array<std::pair<int, int>, 3> edges = {
                std::pair{t.a, t.b}, {t.b, t.c}, {t.c, t.a}};
            for (const auto& [u, v] : edges) {
                auto it = edge_owner.find(edge_key(v, u));
                if (it == edge_owner.end()) continue;
                const int g = it->second;
                if (mark[g] == epoch) continue;
                if (hull.tris[g].normal.dot(pts[pi]) - hull.tris[g].offset > -eps) {
                    mark[g] = epoch;
                    stack.push_back(g);
                }
            }
        }

        // A pinched horizon (a vertex appearing on two loops) would make the
        // re-fanned star non-manifold; absorb the whole star of any pinch
        // vertex into the visible region and recompute.
        for (int attempt = 0;; ++attempt) {
            horizon.clear();
            for (int f : visible) {
                const Tri& t = hull.tris[f];
                const std::array<std::pair<int, int>, 3> edges = {
                    std::pair{t.a, t.b}, {t.b, t.c}, {t.c, t.a}};
                for (const auto& [u, v] : edges) {
                    auto it = edge_owner.find(edge_key(v, u));
                    if (it == edge_owner.end() || mark[it->second] != epoch)
                        horizon.emplace_back(u, v);
                }
            }
            std::vector<int> sources;
            sources.reserve(horizon.size());
            for (const auto& [u, v] : horizon) sources.push_back(u);
            std::sort(sources.begin(), sources.end());
            std::vector<int> pinched;
            for (size_t i = 1; i < sources.size(); ++i)
                if (sources[i] == sources[i - 1]) pinched.push_back(sources[i]);
            if (pinched.empty()) break;
            if (attempt >= 8) throw Error("convex_hull: non-simple horizon");
            for (size_t f = 0; f < hull.tris.size(); ++f) {
                const Tri& t = hull.tris[f];
                if (!t.alive || mark[f] == epoch) continue;
                for (int x : pinched) {
                    if (t.a == x || t.b == x || t.c == x) {
                        mark[f] = epoch;
                        visible.push_back(static_cast<int>(f));
                        break;
                    }
                }
            }
        }
        for (int f : visible) drop_face(f);
        alive_count -= visible.size();
        for (const auto& [u, v] : horizon) add_face(u, v, p);
        alive_count += horizon.size();
    }

    // compact
    std::vector<Tri> alive;
    for (auto& t : hull.tris)
        if (t.alive) alive.push_back(t);
    hull.tris = std::move(alive);
    return hull;
}

std::vector<V3> to_v3(const std::vector<Vec>& pts) {
    std::vector<V3> out(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) out[i] = V3(pts[i][0], pts[i][1], pts[i][2]);
    return out;
}

// Merge coplanar triangles into polygonal facets and rebuild minimal
// vertex/facet/halfspace data.
Polytope assemble_polytope3(const Hull3& hull) {
    const double eps = kEpsGeom * hull.scale;
    const size_t nt = hull.tris.size();

    // adjacency-respecting coplanarity clusters
    std::unordered_map<uint64_t, int> edge_owner;
    for (size_t f = 0; f < nt; ++f) {
        const Tri& t = hull.tris[f];
        edge_owner[edge_key(t.a, t.b)] = static_cast<int>(f);
        edge_owner[edge_key(t.b, t.c)] = static_cast<int>(f);
        edge_owner[edge_key(t.c, t.a)] = static_cast<int>(f);
    }
    std::vector<int> cluster(nt, -1);
    int nclusters = 0;
    for (size_t f0 = 0; f0 < nt; ++f0) {
        if (cluster[f0] >= 0) continue;
        const int id = nclusters++;
        std::vector<int> stack = {static_cast<int>(f0)};
        cluster[f0] = id;
        while (!stack.empty()) {
            const Tri& t = hull.tris[stack.back()];
            stack.pop_back();
            const std::array<std::pair<int, int>, 3> edges = {
                std::pair{t.a, t.b}, {t.b, t.c}, {t.c, t.a}};
            for (const auto& [u, v] : edges) {
                auto it = edge_owner.find(edge_key(v, u));
                if (it == edge_owner.end()) continue;
                const int g = it->second;
                if (cluster[g] >= 0) continue;
                if (hull.tris[g].normal.dot(t.normal) > 1.0 - 1e-10 &&
                    std::abs(hull.tris[g].offset - t.offset) <= eps) {
                    cluster[g] = cluster[f0];
                    stack.push_back(g);
                }
            }
        }
    }

    std::vector<Vec> vertices;
    std::vector<Halfspace> halfspaces;
    std::vector<Facet> facets;
    std::unordered_map<int, int> vertex_id;  // hull point index -> output index

    for (int c = 0; c < nclusters; ++c) {
        // area-weighted plane fit over the cluster
        V3 nsum = V3::Zero();
        std::vector<int> members;
        for (size_t f = 0; f < nt; ++f) {
            if (cluster[f] != c) continue;
            const Tri& t = hull.tris[f];
            nsum += (hull.pts[t.b] - hull.pts[t.a]).cross(hull.pts[t.c] - hull.pts[t.a]);
            members.insert(members.end(), {t.a, t.b, t.c});
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        const V3 n = nsum.normalized();
        double off = 0;
        for (int m : members) off += n.dot(hull.pts[m]);
        off /= static_cast<double>(members.size());

        // facet polygon: 2D hull of the member points in the plane
        V3 u = n.unitOrthogonal();
        V3 w = n.cross(u);
        std::vector<Vec> plane_pts(members.size());
        for (size_t i = 0; i < members.size(); ++i) {
            plane_pts[i] = Vec(2);
            plane_pts[i] << u.dot(hull.pts[members[i]]), w.dot(hull.pts[members[i]]);
        }
        std::vector<int> ring = hull2_indices(plane_pts, hull.scale);
        double area2 = 0;  // doubled polygon area
        for (size_t i = 0; i < ring.size(); ++i) {
            const Vec& a = plane_pts[ring[i]];
            const Vec& b = plane_pts[ring[(i + 1) % ring.size()]];
            area2 += a[0] * b[1] - a[1] * b[0];
        }

        Facet facet;
        facet.normal = Vec(3);
        facet.normal << n[0], n[1], n[2];
        facet.area = std::abs(area2) / 2.0;
        for (int r : ring) {
            const int hull_id = members[r];
            auto it = vertex_id.find(hull_id);
            if (it == vertex_id.end()) {
                it = vertex_id.emplace(hull_id, static_cast<int>(vertices.size())).first;
                Vec v(3);
                v << hull.pts[hull_id][0], hull.pts[hull_id][1], hull.pts[hull_id][2];
                vertices.push_back(std::move(v));
            }
            facet.vertex_ids.push_back(it->second);
        }
        halfspaces.push_back({facet.normal, off});
        facets.push_back(std::move(facet));
    }
    return Polytope::from_parts(3, std::move(vertices), std::move(halfspaces),
                                std::move(facets));
}

Polytope assemble_polytope2(const std::vector<Vec>& pts, const std::vector<int>& ring) {
    std::vector<Vec> vertices;
    vertices.reserve(ring.size());
    for (int r : ring) vertices.push_back(pts[r]);
    const int nv = static_cast<int>(vertices.size());
    std::vector<Halfspace> halfspaces;
    std::vector<Facet> facets;
    for (int i = 0; i < nv; ++i) {
        const Vec& p = vertices[i];
        const Vec& q = vertices[(i + 1) % nv];
        Vec d = q - p;
        const double len = d.norm();
        Vec n(2);
        n << d[1] / len, -d[0] / len;  // outward for a CCW ring
        halfspaces.push_back({n, n.dot(p)});
        facets.push_back({n, len, {i, (i + 1) % nv}});
    }
    return Polytope::from_parts(2, std::move(vertices), std::move(halfspaces),
                                std::move(facets));
}

}  // namespace

// ---------------------------------------------------------------- measure

double FacetMeasure::total() const {
    double t = 0;
    for (const auto& a : atoms) t += a.weight;
    return t;
}

double FacetMeasure::closedness_defect() const {
    if (atoms.empty()) return 0.0;
    Vec s = Vec::Zero(atoms.front().normal.size());
    for (const auto& a : atoms) s += a.weight * a.normal;
    return s.norm();
}

// ---------------------------------------------------------------- polytope

Polytope Polytope::from_parts(int dim, std::vector<Vec> vertices,
                              std::vector<Halfspace> halfspaces,
                              std::vector<Facet> facets) {
    Polytope p;
    p.dim_ = dim;
    p.vertices_ = std::move(vertices);
    p.halfspaces_ = std::move(halfspaces);
    p.facets_ = std::move(facets);
    p.scale_ = cloud_scale(p.vertices_);

    const Vec c = p.interior_point();
    double vol = 0;
    for (size_t j = 0; j < p.facets_.size(); ++j)
        vol += p.facets_[j].area * (p.halfspaces_[j].offset - p.halfspaces_[j].normal.dot(c));
    p.volume_ = vol / dim;
    if (!(p.volume_ > kEpsVol))
        throw DegenerateInput("polytope is not full-dimensional");
    return p;
}

double Polytope::surface_area() const {
    double s = 0;
    for (const auto& f : facets_) s += f.area;
    return s;
}

Vec Polytope::interior_point() const {
    Vec c = Vec::Zero(dim_);
    for (const auto& v : vertices_) c += v;
    return c / static_cast<double>(vertices_.size());
}

bool Polytope::contains(const Vec& x, double tol) const {
    const double t = tol * std::max(1.0, scale_);
    for (const auto& h : halfspaces_)
        if (h.normal.dot(x) > h.offset + t) return false;
    return true;
}

void Polytope::validate() const {
    const double tol = 10 * kEpsGeom * std::max(1.0, scale_);
    for (const auto& v : vertices_)
        if (!contains(v, 10 * kEpsGeom))
            throw DegenerateInput("vertex violates a halfspace");
    for (size_t j = 0; j < halfspaces_.size(); ++j) {
        const auto& h = halfspaces_[j];
        std::vector<const Vec*> tight;
        for (const auto& v : vertices_)
            if (std::abs(h.normal.dot(v) - h.offset) <= tol) tight.push_back(&v);
        if (static_cast<int>(tight.size()) < dim_)
            throw DegenerateInput("halfspace tight at fewer than n vertices");
        Mat rel(dim_, tight.size() - 1);
        for (size_t i = 1; i < tight.size(); ++i) rel.col(i - 1) = *tight[i] - *tight[0];
        if (Eigen::FullPivLU<Mat>(rel).rank() < dim_ - 1)
            throw DegenerateInput("tight vertex set is affinely dependent");
    }
    FacetMeasure m = surface_area_measure(*this);
    if (m.closedness_defect() > kEpsGeom * std::max(1.0, m.total()))
        throw DegenerateInput("surface area measure is not closed");
}

// ---------------------------------------------------------------- hulls

Polytope convex_hull(const std::vector<Vec>& points) {
    if (points.empty()) throw DegenerateInput("convex_hull: no points");
    const int dim = static_cast<int>(points.front().size());
    if (dim != 2 && dim != 3)
        throw DimensionMismatch("convex_hull: only n in {2,3} supported");
    const double scale = cloud_scale(points);
    std::vector<Vec> pts = dedup_points(points, 1e-12 * scale);
    if (dim == 2) {
        if (pts.size() < 3) throw DegenerateInput("convex_hull: fewer than 3 distinct points");
        std::vector<int> ring = hull2_indices(pts, scale);
        if (ring.size() < 3) throw DegenerateInput("convex_hull: points are collinear");
        return assemble_polytope2(pts, ring);
    }
    return assemble_polytope3(build_hull3(to_v3(pts), scale));
}

double hull_volume(const std::vector<Vec>& points, int dim) {
    if (points.empty()) return 0.0;
    const double scale = cloud_scale(points);
    std::vector<Vec> pts = dedup_points(points, 1e-12 * scale);
    if (static_cast<int>(pts.size()) <= dim) return 0.0;
    if (dim == 2) {
        std::vector<int> ring = hull2_indices(pts, scale);
        if (ring.size() < 3) return 0.0;
        double area2 = 0;
        for (size_t i = 0; i < ring.size(); ++i) {
            const Vec& a = pts[ring[i]];
            const Vec& b = pts[ring[(i + 1) % ring.size()]];
            area2 += a[0] * b[1] - a[1] * b[0];
        }
        return std::abs(area2) / 2.0;
    }
    Hull3 hull;
    try {
        hull = build_hull3(to_v3(pts), scale);
    } catch (const DegenerateInput&) {
        return 0.0;  // lower-dimensional summand
    }
    V3 c = V3::Zero();
    for (const auto& p : hull.pts) c += p;
    c /= static_cast<double>(hull.pts.size());
    double vol6 = 0;
    for (const auto& t : hull.tris) {
        const V3 a = hull.pts[t.a] - c, b = hull.pts[t.b] - c, d = hull.pts[t.c] - c;
        vol6 += a.dot(b.cross(d));
    }
    return std::abs(vol6) / 6.0;
}

// ------------------------------------------------- halfspace intersection

Polytope halfspace_intersection(const std::vector<Halfspace>& halfspaces,
                                double bound_hint) {
    if (halfspaces.empty()) throw Unbounded("halfspace_intersection: no constraints");
    const int dim = static_cast<int>(halfspaces.front().normal.size());
    if (dim != 2 && dim != 3)
        throw DimensionMismatch("halfspace_intersection: only n in {2,3} supported");

    // normalize and merge parallel constraints (keep the tightest)
    std::vector<Halfspace> hs;
    for (const auto& h : halfspaces) {
        const double len = h.normal.norm();
        if (len <= 0) throw DegenerateInput("halfspace with zero normal");
        Vec n = h.normal / len;
        const double b = h.offset / len;
        bool merged = false;
        for (auto& g : hs) {
            if (n.dot(g.normal) > 1.0 - 1e-12) {
                g.offset = std::min(g.offset, b);
                merged = true;
                break;
            }
        }
        if (!merged) hs.push_back({std::move(n), b});
    }
    double scale = 1.0;
    for (const auto& h : hs) scale = std::max(scale, std::abs(h.offset));
    const double feas_tol = kEpsGeom * scale;
    for (int k = 0; k < dim; ++k) {
        Vec e = Vec::Zero(dim);
        e[k] = 1;
        hs.push_back({e, bound_hint});
        hs.push_back({-e, bound_hint});
    }

    const int nh = static_cast<int>(hs.size());
    std::vector<Vec> candidates;
    Mat a(dim, dim);
    Vec b(dim);
    std::vector<int> pick(dim);
    auto try_subset = [&]() {
        for (int i = 0; i < dim; ++i) {
            a.row(i) = hs[pick[i]].normal;
            b[i] = hs[pick[i]].offset;
        }
        Eigen::FullPivLU<Mat> lu(a);
        if (!lu.isInvertible()) return;
        const Vec x = lu.solve(b);
        if (x.cwiseAbs().maxCoeff() > 2 * bound_hint) return;
        for (const auto& h : hs)
            if (h.normal.dot(x) > h.offset + feas_tol) return;
        candidates.push_back(x);
    };
    if (dim == 2) {
        for (pick[0] = 0; pick[0] < nh; ++pick[0])
            for (pick[1] = pick[0] + 1; pick[1] < nh; ++pick[1]) try_subset();
    } else {
        for (pick[0] = 0; pick[0] < nh; ++pick[0])
            for (pick[1] = pick[0] + 1; pick[1] < nh; ++pick[1])
                for (pick[2] = pick[1] + 1; pick[2] < nh; ++pick[2]) try_subset();
    }

    if (candidates.empty()) throw EmptyIntersection("halfspace_intersection: empty");
    candidates = dedup_points(std::move(candidates), kEpsGeom * scale);
    for (const auto& x : candidates)
        if (x.cwiseAbs().maxCoeff() >= bound_hint * (1.0 - 1e-6))
            throw Unbounded("halfspace_intersection: intersection is unbounded");
    if (hull_volume(candidates, dim) <= kEpsVol)
        throw EmptyIntersection("halfspace_intersection: lower-dimensional");
    return convex_hull(candidates);
}

// ---------------------------------------------------------------- ops

FacetMeasure surface_area_measure(const Polytope& p) {
    FacetMeasure m;
    m.atoms.reserve(p.facets().size());
    for (const auto& f : p.facets()) m.atoms.push_back({f.normal, f.area});
    return m;
}

namespace {
std::vector<Vec> sum_points(const std::vector<Vec>& ps, const std::vector<Vec>& qs) {
    std::vector<Vec> out;
    out.reserve(ps.size() * qs.size());
    for (const auto& p : ps)
        for (const auto& q : qs) out.push_back(p + q);
    return out;
}
}  // namespace

std::vector<Vec> minkowski_points(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    std::vector<Vec> out = sum_points(a, b);
    const double tol = 1e-12 * cloud_scale(out);
    return dedup_points(std::move(out), tol);
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
    if (p.dim() != q.dim()) throw DimensionMismatch("minkowski_sum: dimensions differ");
    return convex_hull(sum_points(p.vertices(), q.vertices()));
}

Polytope minkowski_sum(const Polytope& p, const Segment& s) {
    if (p.dim() != s.a.size()) throw DimensionMismatch("minkowski_sum: dimensions differ");
    return convex_hull(sum_points(p.vertices(), {s.a, s.b}));
}

double surface_area_via_limit(const Polytope& p, double eps) {
    const Polytope ball = ball_approx(p.dim(), p.dim() == 2 ? 720 : 4);
    std::vector<Vec> scaled(ball.vertices().size());
    for (size_t i = 0; i < scaled.size(); ++i) scaled[i] = eps * ball.vertices()[i];
    const double grown = hull_volume(sum_points(p.vertices(), scaled), p.dim());
    return (grown - p.volume()) / eps;
}

double project_shadow(const Polytope& p, const Vec& theta) {
    const double len = theta.norm();
    if (len <= 0) throw ZeroDirection("project_shadow: zero direction");
    const int n = p.dim();
    // orthonormal basis of theta^perp
    Mat basis(n, n);
    basis.col(0) = theta / len;
    Eigen::HouseholderQR<Mat> qr(basis.col(0));
    Mat q = qr.householderQ();
    if (n == 2) {
        const Vec u = q.col(1);
        double lo = u.dot(p.vertices().front()), hi = lo;
        for (const auto& v : p.vertices()) {
            const double t = u.dot(v);
            lo = std::min(lo, t);
            hi = std::max(hi, t);
        }
        return hi - lo;
    }
    std::vector<Vec> shadow(p.vertices().size());
    for (size_t i = 0; i < shadow.size(); ++i) {
        Vec y(2);
        y << q.col(1).dot(p.vertices()[i]), q.col(2).dot(p.vertices()[i]);
        shadow[i] = std::move(y);
    }
    return hull_volume(shadow, 2);
}

Polytope linear_image(const Polytope& p, const Mat& a) {
    if (a.rows() != p.dim() || a.cols() != p.dim())
        throw DimensionMismatch("linear_image: matrix shape");
    if (std::abs(a.determinant()) < 1e-12)
        throw SingularMatrix("linear_image: singular matrix");
    std::vector<Vec> pts(p.vertices().size());
    for (size_t i = 0; i < pts.size(); ++i) pts[i] = a * p.vertices()[i];
    return convex_hull(pts);
}

Polytope translate(const Polytope& p, const Vec& x) {
    if (x.size() != p.dim()) throw DimensionMismatch("translate: dimension");
    std::vector<Vec> pts(p.vertices().size());
    for (size_t i = 0; i < pts.size(); ++i) pts[i] = p.vertices()[i] + x;
    return convex_hull(pts);
}

// ---------------------------------------------------------------- meshes

TriMesh icosphere(int level) {
    const double t = std::numbers::phi;
    TriMesh mesh;
    mesh.vertices = {{-1, t, 0}, {1, t, 0},  {-1, -t, 0}, {1, -t, 0},
                     {0, -1, t}, {0, 1, t},  {0, -1, -t}, {0, 1, -t},
                     {t, 0, -1}, {t, 0, 1},  {-t, 0, -1}, {-t, 0, 1}};
    for (auto& v : mesh.vertices) v.normalize();
    mesh.faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                  {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                  {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                  {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

    for (int l = 0; l < level; ++l) {
        std::unordered_map<uint64_t, int> midpoint;
        auto mid = [&](int i, int j) {
            const uint64_t key = edge_key(std::min(i, j), std::max(i, j));
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            Eigen::Vector3d m = (mesh.vertices[i] + mesh.vertices[j]).normalized();
            const int id = static_cast<int>(mesh.vertices.size());
            mesh.vertices.push_back(m);
            midpoint.emplace(key, id);
            return id;
        };
        std::vector<std::array<int, 3>> faces;
        faces.reserve(mesh.faces.size() * 4);
        for (const auto& [a, b, c] : mesh.faces) {
            const int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
            faces.push_back({a, ab, ca});
            faces.push_back({b, bc, ab});
            faces.push_back({c, ca, bc});
            faces.push_back({ab, bc, ca});
        }
        mesh.faces = std::move(faces);
    }
    // outward orientation
    for (auto& [a, b, c] : mesh.faces) {
        const auto& va = mesh.vertices[a];
        const auto& vb = mesh.vertices[b];
        const auto& vc = mesh.vertices[c];
        if ((vb - va).cross(vc - va).dot(va + vb + vc) < 0) std::swap(b, c);
    }
    return mesh;
}

Polytope ball_approx(int dim, int resolution) {
    if (dim == 2) return make_regular_kgon(resolution);
    if (dim != 3) throw DimensionMismatch("ball_approx: only n in {2,3}");
    TriMesh mesh = icosphere(resolution);
    std::vector<Vec> pts(mesh.vertices.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        pts[i] = Vec(3);
        pts[i] << mesh.vertices[i][0], mesh.vertices[i][1], mesh.vertices[i][2];
    }
    return convex_hull(pts);
}

// ---------------------------------------------------------------- builders

Polytope make_cube(int dim, double half_side) {
    std::vector<Vec> pts;
    for (int mask = 0; mask < (1 << dim); ++mask) {
        Vec v(dim);
        for (int k = 0; k < dim; ++k) v[k] = (mask >> k & 1) ? half_side : -half_side;
        pts.push_back(std::move(v));
    }
    return convex_hull(pts);
}

Polytope make_simplex(int dim) {
    std::vector<Vec> pts = {Vec::Zero(dim)};
    for (int k = 0; k < dim; ++k) {
        Vec v = Vec::Zero(dim);
        v[k] = 1;
        pts.push_back(std::move(v));
    }
    return convex_hull(pts);
}

Polytope make_cross_polytope(int dim) {
    std::vector<Vec> pts;
    for (int k = 0; k < dim; ++k) {
        Vec v = Vec::Zero(dim);
        v[k] = 1;
        pts.push_back(v);
        v[k] = -1;
        pts.push_back(std::move(v));
    }
    return convex_hull(pts);
}

Polytope make_regular_kgon(int k, double radius) {
    std::vector<Vec> pts(k);
    for (int j = 0; j < k; ++j) {
        const double a = 2.0 * std::numbers::pi * j / k;
        pts[j] = Vec(2);
        pts[j] << radius * std::cos(a), radius * std::sin(a);
    }
    return convex_hull(pts);
}

}  // namespace hpl
