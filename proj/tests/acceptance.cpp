// Acceptance suite: one line per criterion, exit code = number of failures.
// Every tolerance is pinned here; nothing is deferred to calibration.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "hpl/covariogram.hpp"
#include "hpl/harness.hpp"
#include "hpl/mixed_volumes.hpp"
#include "hpl/monte_carlo.hpp"
#include "hpl/positions.hpp"
#include "hpl/random_bodies.hpp"

using namespace hpl;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void report(int id, const std::string& title, bool pass, const std::string& detail) {
    std::printf("[%s] %02d %s%s%s\n", pass ? "PASS" : "FAIL", id, title.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(const char* spec, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), spec, a, b, c);
    return buf;
}

struct PettyEstimateT {
    double mean, sigma;
};

PettyEstimateT petty_of(const ConvexBodySpec& body, int m, long long samples,
                        uint64_t seed) {
    const EstimateCI polar = star_volume(make_gauge_m_order(body, m), samples, seed);
    const double f = std::pow(body.volume(), body.dim() * m - m);
    return {f * polar.mean, f * polar.std_error};
}

}  // namespace

// 1. classical Petty constant on the ball, n=2, m=1
static void criterion_1() {
    Timer timer;
    const double target = std::pow(std::numbers::pi / 2, 2);
    const PettyEstimateT p =
        petty_of(ConvexBodySpec::ball(2, 1.0), 1, 1000000, 20250801);
    const double elapsed = timer.seconds();
    const bool pass = std::abs(p.mean - target) <= 3 * p.sigma + 1e-4 * target &&
                      p.sigma < 0.005 && elapsed < 10.0;
    report(1, "classical Petty constant, n=2, m=1", pass,
           fmt("P(ball)=%.8f vs (pi/2)^2=%.8f, sigma=%.2e", p.mean, target, p.sigma) +
               fmt(", %.1fs", elapsed));
}

// 2. Zhang equality on simplices
static void criterion_2() {
    const PettyEstimateT tri = petty_of(
        ConvexBodySpec::from_polytope(make_simplex(2)), 1, 400000, 20250802);
    const PettyEstimateT tet = petty_of(
        ConvexBodySpec::from_polytope(make_simplex(3)), 1, 400000, 20250803);
    const double z2 = zhang_lower_constant(2, 1);  // 3/2
    const double z3 = zhang_lower_constant(3, 1);  // 20/27
    const bool pass = std::abs(tri.mean - z2) <= 3 * tri.sigma &&
                      std::abs(tet.mean - z3) <= 3 * tet.sigma;
    report(2, "Zhang equality on simplices", pass,
           fmt("P(triangle)=%.6f (1.5), P(tetrahedron)=%.6f (20/27=%.6f)", tri.mean,
               tet.mean, z3));
}

// 3. mth-order sandwich for every catalog body, n=2, m=2
static void criterion_3() {
    const Catalog cat = Catalog::builtin();
    const double lower = zhang_lower_constant(2, 2);  // 15/16
    const EstimateCI upper = petty_upper_constant(2, 2, 100000, 20250804);
    bool pass = true;
    std::string detail;
    double tri_mean = 0;
    uint64_t seed = 20250805;
    for (const auto& name : cat.default_bodies(2)) {
        const ConvexBodySpec body = cat.body(name, 2);
        const PettyEstimateT p = petty_of(body, 2, 100000, seed++);
        const double quad_eps = body.is_polytope() ? 0.0 : 1e-4 * upper.mean;
        if (p.mean < lower - 3 * p.sigma ||
            p.mean > upper.mean + 3 * std::hypot(p.sigma, upper.std_error) + quad_eps) {
            pass = false;
            detail += name + " outside sandwich; ";
        }
        if (name == "triangle") tri_mean = p.mean;
        if (name == "triangle" && std::abs(p.mean - lower) > 3 * p.sigma) {
            pass = false;
            detail += "triangle off the Zhang bound; ";
        }
    }
    report(3, "mth-order sandwich, n=2, m=2", pass,
           detail.empty() ? fmt("15/16=%.6f <= P <= %.6f; P(triangle)=%.6f", lower,
                                upper.mean, tri_mean)
                          : detail);
}

// 4. m=1 constant reduction (quadrature-only error)
static void criterion_4() {
    const double t2 = std::numbers::pi * std::numbers::pi;
    const EstimateCI e2 = mean_width_constant(2, 1, 4000, 20250806);
    const EstimateCI e3 = mean_width_constant(3, 1, 4000, 20250807);
    const double r2 = std::abs(e2.mean - t2) / t2;
    const double r3 = std::abs(e3.mean - 64.0) / 64.0;
    const bool pass = r2 < 1e-4 && r3 < 1e-4;
    report(4, "m=1 constant reduction to (n omega_n / omega_{n-1})^n", pass,
           fmt("n=2 rel err %.2e, n=3 rel err %.2e", r2, r3));
}

// 5. section and diagonal identities, exact at 1e-12
static void criterion_5() {
    SplitMix64 rng(20250808);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        const int n = 2 + static_cast<int>(rng.next() % 2);
        const int m = 2 + static_cast<int>(rng.next() % 2);
        const ConvexBodySpec body =
            ConvexBodySpec::from_polytope(random_polytope(n, 8, rng));
        Vec u(n);
        for (int k = 0; k < n; ++k) u[k] = gaussian(rng);
        u.normalize();
        const double classic = gauge_classic(body, u);

        DirectionTuple embedded(n, m);
        embedded.set_block(static_cast<int>(rng.next() % m), u);
        worst = std::max(worst,
                         std::abs(gauge_m_order(body, embedded) - classic) / classic);
        DirectionTuple diag(n, m);
        for (int j = 0; j < m; ++j) diag.set_block(j, u / std::sqrt(double(m)));
        worst = std::max(worst, std::abs(gauge_m_order(body, diag) -
                                         classic / std::sqrt(double(m))) /
                                    classic);
    }
    report(5, "section/diagonal identities on 1000 random pairs", worst <= 1e-12,
           fmt("worst relative deviation %.2e", worst));
}

// 6. variational formula on 100 random cases
static void criterion_6() {
    Timer timer;
    SplitMix64 rng(20250809);
    double worst = 0;
    int count = 0;
    for (int n = 2; n <= 3; ++n)
        for (int m = 1; m <= 2; ++m)
            for (int i = 0; i < 25; ++i) {
                const Polytope k = random_polytope(n, n == 2 ? 7 : 9, rng);
                const DirectionTuple theta = random_direction_tuple(n, m, rng);
                const double gauge =
                    gauge_m_order(ConvexBodySpec::from_polytope(k), theta);
                const RadialDerivative rd = radial_derivative(k, theta);
                worst = std::max(worst, std::abs(rd.value + gauge) / gauge);
                ++count;
            }
    const double elapsed = timer.seconds();
    const bool pass = worst <= 1e-2 && elapsed < 60.0 && count == 100;
    report(6, "variational formula, 100 random cases", pass,
           fmt("worst rel err %.2e, %.1fs", worst, elapsed));
}

// 7. affine invariance with 50 maps per body and common random numbers
static void criterion_7() {
    SuiteConfig cfg;
    cfg.suite = "affine-invariance";
    cfg.n = 2;
    cfg.m = 1;
    cfg.bodies = {"square", "triangle", "ball"};
    cfg.samples = 20000;
    cfg.seed = 20250810;
    cfg.affine_maps = 50;
    const SuiteReport r = run_suite(cfg);
    int checks = 0;
    for (const auto& c : r.checks)
        if (c.verdict == Verdict::Pass) ++checks;
    report(7, "affine invariance, 50 random maps per body", !r.any_fail(),
           fmt("%g of %g records PASS", double(checks), double(r.checks.size())));
}

// 8. pointwise reverse-AF gauge inequalities, n=3, m in {1,2}
static void criterion_8() {
    SplitMix64 rng(20250811);
    double min_slack = std::numeric_limits<double>::infinity();
    for (int m = 1; m <= 2; ++m) {
        for (int pair = 0; pair < 50; ++pair) {
            const Polytope k1 = random_polytope(3, 8, rng);
            const Polytope k2 = random_polytope(3, 8, rng);
            const GaugeSpec gm = make_mixed_gauge({k1, k2}, m);
            const ConvexBodySpec b1 = ConvexBodySpec::from_polytope(k1);
            const ConvexBodySpec b2 = ConvexBodySpec::from_polytope(k2);
            for (int i = 0; i < 10; ++i) {
                const DirectionTuple theta = random_direction_tuple(3, m, rng);
                const double vm = gm(theta.flat);
                const double v1 = gauge_m_order(b1, theta);
                const double v2 = gauge_m_order(b2, theta);
                min_slack = std::min(min_slack, (vm * vm - v1 * v2) / (vm * vm));
                const double lhs = std::pow(vm, 3 * m);
                const double rhs = std::pow(v1 * v2, 3 * m / 2.0);
                min_slack = std::min(min_slack, (lhs - rhs) / lhs);
            }
        }
    }
    report(8, "pointwise AF-type gauge inequalities, n=3, m in {1,2}",
           min_slack >= -1e-9, fmt("min normalized slack %.2e over 1000 cases", min_slack));
}

// 9. mixed volume inequality, n=3, m=1: strict for cube/simplex, equality
//    for homothets
static void criterion_9() {
    SuiteConfig cfg;
    cfg.suite = "mixed";
    cfg.n = 3;
    cfg.m = 1;
    cfg.bodies = {"cube", "simplex"};
    cfg.samples = 20000;
    cfg.seed = 20250812;
    const SuiteReport r = run_suite(cfg);
    bool strict_pass = false, homothety_pass = false;
    for (const auto& c : r.checks) {
        if (c.name.rfind("strict", 0) == 0) strict_pass = c.verdict == Verdict::Pass;
        if (c.name.rfind("homothety", 0) == 0) homothety_pass = c.verdict == Verdict::Pass;
    }
    report(9, "mixed volume inequality, n=3, m=1", strict_pass && homothety_pass &&
           !r.any_fail(),
           std::string("strict separation ") + (strict_pass ? "certified" : "missing") +
               ", homothety equality " + (homothety_pass ? "holds" : "violated"));
}

// 10. stability chain for all catalog bodies, n=2, m in {1,2}
static void criterion_10() {
    bool pass = true;
    std::string detail;
    for (int m = 1; m <= 2; ++m) {
        SuiteConfig cfg;
        cfg.suite = "stability";
        cfg.n = 2;
        cfg.m = m;
        cfg.samples = 100000;
        cfg.seed = 20250813 + m;
        const SuiteReport r = run_suite(cfg);
        if (r.any_fail()) {
            pass = false;
            detail += fmt("m=%g has failures; ", double(m));
        }
    }
    // the square at m=1, with the exact product: P = 2 >= pi^3/16
    const double exact_lhs = 2.0;
    const double rhs = std::pow(std::numbers::pi, 3) / 16.0;
    if (!(exact_lhs >= rhs)) pass = false;
    report(10, "stability chain, n=2, m in {1,2}", pass,
           detail.empty() ? fmt("square exact check: 2 >= pi^3/16 = %.6f", rhs) : detail);
}

// 11. John solver accuracy and Ball's bound
static void criterion_11() {
    const Catalog cat = Catalog::builtin();
    bool pass = true;
    std::string detail;

    const double vr_square = volume_ratio(make_cube(2));
    const double target = 2.0 / std::sqrt(std::numbers::pi);
    if (std::abs(vr_square - target) > 1e-6) {
        pass = false;
        detail += fmt("vr(square)=%.8f != %.8f; ", vr_square, target);
    }
    for (int n = 2; n <= 3; ++n) {
        for (const auto& name : cat.default_bodies(n)) {
            const ConvexBodySpec body = cat.body(name, n);
            const double vr = volume_ratio(body);
            if (vr < 1.0 - 1e-9 || vr > n + 1e-6) {
                pass = false;
                detail += name + fmt(" vr=%.4f out of [1,n]; ", vr);
            }
            if (!body.is_polytope()) continue;
            const auto [surf, nvol] =
                ball_surface_bound_check(john_position_transform(body.polytope()).image);
            if (surf > nvol + 1e-6 * nvol) {
                pass = false;
                detail += name + " violates Ball's bound; ";
            }
            if ((name == "square" || name == "cube") &&
                std::abs(surf - nvol) > 1e-6 * nvol) {
                pass = false;
                detail += name + " should attain Ball's bound; ";
            }
        }
    }
    report(11, "John solver: volume ratios and Ball's bound", pass,
           detail.empty() ? fmt("vr(square)=%.8f", vr_square) : detail);
}

// 12. byte-identical reports on reruns
static void criterion_12() {
    SuiteConfig cfg;
    cfg.suite = "petty-zhang";
    cfg.n = 2;
    cfg.m = 1;
    cfg.bodies = {"square", "triangle", "ball"};
    cfg.samples = 20000;
    cfg.seed = 20250814;
    const std::string a_json = run_suite(cfg).to_json(false);
    const std::string b_json = run_suite(cfg).to_json(false);
    const std::string a_csv = run_suite(cfg).to_csv();
    const std::string b_csv = run_suite(cfg).to_csv();
    report(12, "determinism: identical flags give identical reports",
           a_json == b_json && a_csv == b_csv && !a_json.empty(),
           fmt("%g bytes of JSON compared", double(a_json.size())));
}

int main() {
    Timer total;
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    std::printf("acceptance: %d of 12 criteria passed in %.1fs\n", 12 - failures,
                total.seconds());
    return failures;
}
