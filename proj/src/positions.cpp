#include "hpl/positions.hpp"

#include <cmath>

#include "hpl/monte_carlo.hpp"

namespace hpl {

namespace {

// symmetric-matrix packing: diagonal first, then strict upper triangle
int sym_size(int n) { return n * (n + 1) / 2; }

Mat unpack_sym(const Vec& v, int n) {
    Mat b(n, n);
    int idx = 0;
    for (int i = 0; i < n; ++i) b(i, i) = v[idx++];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            b(i, j) = v[idx];
            b(j, i) = v[idx];
            ++idx;
        }
    return b;
}

// symmetric coordinate basis E_k applied to a vector: E_k a
void basis_times(int n, int k, const Vec& a, Vec& out) {
    out.setZero();
    if (k < n) {
        out[k] = a[k];
        return;
    }
    int idx = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (idx == k) {
                out[i] = a[j];
                out[j] = a[i];
                return;
            }
            ++idx;
        }
}

struct BarrierState {
    const Polytope* p;
    double mu;
    int n;

    bool feasible(const Vec& v, Mat* b_out = nullptr, Vec* slack_out = nullptr) const {
        Mat b = unpack_sym(v.head(sym_size(n)), n);
        Eigen::LLT<Mat> llt(b);
        if (llt.info() != Eigen::Success) return false;
        const Vec d = v.tail(n);
        Vec slack(p->halfspaces().size());
        for (size_t i = 0; i < p->halfspaces().size(); ++i) {
            const auto& h = p->halfspaces()[i];
            slack[i] = h.offset - h.normal.dot(d) - (b * h.normal).norm();
            if (slack[i] <= 0) return false;
        }
        if (b_out) *b_out = std::move(b);
        if (slack_out) *slack_out = std::move(slack);
        return true;
    }

    // negative barrier objective (we minimize)
    double value(const Vec& v) const {
        Mat b;
        Vec slack;
        if (!feasible(v, &b, &slack)) return std::numeric_limits<double>::infinity();
        double obj = std::log(b.determinant());
        for (int i = 0; i < slack.size(); ++i) obj += mu * std::log(slack[i]);
        return -obj;
    }

    // analytic gradient and hessian of the negative barrier; the point must
    // be feasible
    bool derivatives(const Vec& v, Vec& grad, Mat& hess) const {
        Mat b;
        Vec slack;
        if (!feasible(v, &b, &slack)) return false;
        const int q = sym_size(n) + n;
        const Mat binv = b.inverse();

        grad = Vec::Zero(q);
        hess = Mat::Zero(q, q);

        // -log det B: gradient -tr(B^{-1} E_k), hessian tr(B^{-1}E_k B^{-1}E_l)
        std::vector<Mat> m(sym_size(n));
        Vec tmp(n);
        for (int k = 0; k < sym_size(n); ++k) {
            Mat ek = Mat::Zero(n, n);
            if (k < n) {
                ek(k, k) = 1;
            } else {
                int idx = n;
                for (int i = 0; i < n && idx <= k; ++i)
                    for (int j = i + 1; j < n && idx <= k; ++j) {
                        if (idx == k) {
                            ek(i, j) = 1;
                            ek(j, i) = 1;
                        }
                        ++idx;
                    }
            }
            m[k] = binv * ek;
            grad[k] = -m[k].trace();
        }
        for (int k = 0; k < sym_size(n); ++k)
            for (int l = k; l < sym_size(n); ++l) {
                hess(k, l) = (m[k] * m[l]).trace();
                hess(l, k) = hess(k, l);
            }

        // barrier terms -mu log s_i with s = b_i - <a,d> - ||B a||
        Vec ds(q);
        for (size_t i = 0; i < p->halfspaces().size(); ++i) {
            const Vec& a = p->halfspaces()[i].normal;
            const Vec qv = b * a;
            const double qn = qv.norm();
            const Vec qhat = qv / qn;
            for (int k = 0; k < sym_size(n); ++k) {
                basis_times(n, k, a, tmp);
                ds[k] = -tmp.dot(qhat);
            }
            ds.tail(n) = -a;
            const double s = slack[i];
            grad -= (mu / s) * ds;
            hess += (mu / (s * s)) * ds * ds.transpose();
            // curvature of -||Ba||: (E_k a)^T (I - qhat qhat^T)(E_l a)/||q||
            Mat ua(sym_size(n), n);
            for (int k = 0; k < sym_size(n); ++k) {
                basis_times(n, k, a, tmp);
                ua.row(k) = tmp;
            }
            const Mat proj = (Mat::Identity(n, n) - qhat * qhat.transpose()) / qn;
            hess.topLeftCorner(sym_size(n), sym_size(n)) +=
                (mu / s) * ua * proj * ua.transpose();
        }
        return true;
    }
};

}  // namespace

double Ellipsoid::volume() const {
    return unit_ball_volume(static_cast<int>(shape.rows())) * shape.determinant();
}

Ellipsoid john_ellipsoid(const Polytope& p, const Ellipsoid* warm_start) {
    const int n = p.dim();
    const int q = sym_size(n) + n;

    // start from a ball around the vertex centroid
    Vec v = Vec::Zero(q);
    const Vec c = p.interior_point();
    double r0 = std::numeric_limits<double>::infinity();
    for (const auto& h : p.halfspaces())
        r0 = std::min(r0, h.offset - h.normal.dot(c));
    if (!(r0 > 0)) throw DegenerateInput("john_ellipsoid: centroid not interior");
    for (int i = 0; i < n; ++i) v[i] = 0.5 * r0;
    v.tail(n) = c;
    if (warm_start) {
        int idx = 0;
        for (int i = 0; i < n; ++i) v[idx++] = warm_start->shape(i, i);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) v[idx++] = warm_start->shape(i, j);
        v.tail(n) = warm_start->center;
    }

    const double n_constraints = static_cast<double>(p.halfspaces().size());
    // barrier suboptimality in log det is ~ mu * #constraints; push mu far
    // enough that the determinant is accurate to ~5e-9 relative
    const double mu_end = std::min(1e-10, 5e-9 / n_constraints);

    BarrierState st{&p, 1.0, n};
    const int max_inner = 60;
    bool stage_converged = false;
    Vec g(q);
    Mat h(q, q);
    for (;;) {
        stage_converged = false;
        double f0 = st.value(v);
        for (int inner = 0; inner < max_inner; ++inner) {
            if (!st.derivatives(v, g, h))
                throw NotConverged("john_ellipsoid: iterate left the feasible set");
            Vec step;
            Eigen::LLT<Mat> llt(h);
            if (llt.info() == Eigen::Success) {
                step = -llt.solve(g);
            } else {
                step = -g;
            }
            // newton decrement: the model's predicted value gain
            const double decrement2 = -g.dot(step);
            if (decrement2 < 1e-16 * std::max(1.0, std::abs(f0))) {
                stage_converged = true;
                break;
            }
            double alpha = 1.0;
            bool moved = false;
            for (int bt = 0; bt < 60; ++bt) {
                const Vec trial = v + alpha * step;
                const double ft = st.value(trial);
                if (ft < f0) {
                    v = trial;
                    f0 = ft;
                    moved = true;
                    break;
                }
                alpha /= 2;
            }
            if (!moved) {  // value plateau: cannot improve in doubles
                stage_converged = true;
                break;
            }
        }
        if (st.mu <= mu_end * 1.0000001) break;
        st.mu = std::max(st.mu / 10.0, mu_end);
    }

    Mat b;
    Vec slack;
    if (!st.feasible(v, &b, &slack))
        throw NotConverged("john_ellipsoid: final iterate infeasible");
    if (!stage_converged)
        throw NotConverged("john_ellipsoid: newton stalled, duality gap bound " +
                           std::to_string(st.mu * n_constraints));
    if (slack.minCoeff() < -1e-9 * std::max(1.0, p.scale()))
        throw NotConverged("john_ellipsoid: inscribed check failed");

    Ellipsoid e;
    e.shape = std::move(b);
    e.center = v.tail(n);
    return e;
}

double volume_ratio(const Polytope& p) {
    const Ellipsoid e = john_ellipsoid(p);
    return std::pow(p.volume() / e.volume(), 1.0 / p.dim());
}

double volume_ratio(const ConvexBodySpec& body) {
    if (body.is_polytope()) return volume_ratio(body.polytope());
    return 1.0;  // the John ellipsoid of an ellipsoid is itself
}

JohnTransform john_position_transform(const Polytope& p) {
    const Ellipsoid e = john_ellipsoid(p);
    const Mat map = e.shape.inverse();
    std::vector<Vec> pts(p.vertices().size());
    for (size_t i = 0; i < pts.size(); ++i) pts[i] = map * (p.vertices()[i] - e.center);
    return {map, -map * e.center, convex_hull(pts)};
}

std::pair<double, double> ball_surface_bound_check(const Polytope& p_in_john) {
    return {p_in_john.surface_area(), p_in_john.dim() * p_in_john.volume()};
}

namespace {

// Nelder-Mead for tiny dimensions; returns best point found.
template <typename F>
std::pair<Vec, double> nelder_mead(const F& f, Vec start, double spread, int max_evals,
                                   int* evals_used) {
    const int d = static_cast<int>(start.size());
    std::vector<std::pair<Vec, double>> simplex;
    int evals = 0;
    auto eval = [&](const Vec& x) {
        ++evals;
        return f(x);
    };
    simplex.push_back({start, eval(start)});
    for (int i = 0; i < d; ++i) {
        Vec x = start;
        x[i] += spread;
        simplex.push_back({x, eval(x)});
    }
    auto order = [&]() {
        std::sort(simplex.begin(), simplex.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
    };
    order();
    while (evals < max_evals) {
        if (std::abs(simplex.back().second - simplex.front().second) <
            1e-12 * (1 + std::abs(simplex.front().second)))
            break;
        Vec centroid = Vec::Zero(d);
        for (int i = 0; i < d; ++i) centroid += simplex[i].first;
        centroid /= d;
        const Vec& worst = simplex.back().first;
        const Vec refl = centroid + (centroid - worst);
        const double fr = eval(refl);
        if (fr < simplex.front().second) {
            const Vec exp_pt = centroid + 2 * (centroid - worst);
            const double fe = eval(exp_pt);
            simplex.back() = fe < fr ? std::pair{exp_pt, fe} : std::pair{refl, fr};
        } else if (fr < simplex[d - 1].second) {
            simplex.back() = {refl, fr};
        } else {
            const Vec con = centroid + 0.5 * (worst - centroid);
            const double fc = eval(con);
            if (fc < simplex.back().second) {
                simplex.back() = {con, fc};
            } else {
                for (int i = 1; i <= d; ++i) {
                    simplex[i].first = simplex[0].first + 0.5 * (simplex[i].first - simplex[0].first);
                    simplex[i].second = eval(simplex[i].first);
                }
            }
        }
        order();
    }
    if (evals_used) *evals_used = evals;
    return simplex.front();
}

}  // namespace

MinIsoResult minimal_isoperimetric_ratio(const Polytope& p, int budget) {
    const int n = p.dim();
    MinIsoResult out;
    if (n == 3) {
        // upper bound from John position (enough for the stability chain)
        const JohnTransform jt = john_position_transform(p);
        out.value = jt.image.surface_area() / std::pow(jt.image.volume(), 2.0 / 3.0);
        out.transform = jt.map;
        out.upper_bound_only = true;
        return out;
    }

    // rotations do not move the ratio, so SL_2 reduces to shear * stretch:
    // T(s,t) = [[e^s, t], [0, e^{-s}]]
    auto chart = [](const Vec& x) {
        Mat t(2, 2);
        t << std::exp(x[0]), x[1], 0.0, std::exp(-x[0]);
        return t;
    };
    auto ratio = [&](const Vec& x) {
        if (std::abs(x[0]) > 6 || std::abs(x[1]) > 400) return 1e30;  // keep the chart sane
        const Polytope img = linear_image(p, chart(x));
        return img.surface_area() / std::sqrt(img.volume());
    };

    const std::vector<Vec> starts = {
        (Vec(2) << 0, 0).finished(),      (Vec(2) << 0.4, 0).finished(),
        (Vec(2) << -0.4, 0).finished(),   (Vec(2) << 0, 0.4).finished(),
        (Vec(2) << 0.2, -0.3).finished(),
    };
    double best = std::numeric_limits<double>::infinity();
    Vec best_x = starts.front();
    int remaining = budget;
    bool exhausted = false;
    for (const auto& s : starts) {
        if (remaining <= 0) {
            exhausted = true;
            break;
        }
        int used = 0;
        auto [x, val] = nelder_mead(ratio, s, 0.25, remaining / 2 + 16, &used);
        remaining -= used;
        if (val < best) {
            best = val;
            best_x = x;
        }
    }
    out.value = best;
    out.transform = chart(best_x);
    out.upper_bound_only = exhausted;
    return out;
}

}  // namespace hpl
