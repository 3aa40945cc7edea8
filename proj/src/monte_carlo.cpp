#include "hpl/monte_carlo.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <future>
#include <numbers>
#include <thread>
#include <vector>

#include "hpl/quadrature.hpp"
#include "hpl/rng.hpp"

namespace hpl {

namespace {

constexpr long long kChunk = 4096;

struct ChunkStat {
    double sum = 0;
    double sum_sq = 0;
    double cross = 0;   // paired mode only
    double sum2 = 0;    // paired mode only
    double sum2_sq = 0; // paired mode only
    bool nonpositive = false;
};

// Evaluates value(sample) for samples [0, n) in fixed-size chunks. Chunks
// are farmed out to threads but each sample is a pure function of
// (seed, index) and chunk partials are reduced in index order, so the
// result does not depend on the thread count.
template <typename PerSample>
std::vector<ChunkStat> run_chunks(int dim, long long n, uint64_t seed,
                                  const PerSample& value) {
    const long long chunks = (n + kChunk - 1) / kChunk;
    std::vector<ChunkStat> stats(static_cast<size_t>(chunks));
    const SphereSampler sampler(dim, seed);

    std::atomic<long long> next{0};
    auto worker = [&]() {
        std::vector<double> u(static_cast<size_t>(dim));
        for (;;) {
            const long long c = next.fetch_add(1);
            if (c >= chunks) return;
            ChunkStat st;
            const long long lo = c * kChunk;
            const long long hi = std::min(n, lo + kChunk);
            for (long long i = lo; i < hi; ++i) {
                sampler.sample(static_cast<uint64_t>(i), u);
                value(u.data(), st);
            }
            stats[static_cast<size_t>(c)] = st;
        }
    };

    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min<unsigned>(workers, 8);
    if (const char* env = std::getenv("HPL_THREADS")) {
        const long requested = std::strtol(env, nullptr, 10);
        if (requested >= 1) workers = static_cast<unsigned>(std::min(requested, 64L));
    }
    if (chunks < 2 || workers < 2) {
        worker();
    } else {
        std::vector<std::future<void>> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.push_back(std::async(std::launch::async, worker));
        for (auto& f : pool) f.get();
    }
    return stats;
}

EstimateCI reduce_single(const std::vector<ChunkStat>& stats, long long n,
                         uint64_t seed, double factor) {
    double sum = 0, sum_sq = 0;
    bool bad = false;
    for (const auto& st : stats) {
        sum += st.sum;
        sum_sq += st.sum_sq;
        bad = bad || st.nonpositive;
    }
    if (bad) throw GaugeNonPositive("star_volume: gauge not positive on a sample");
    const double mean = sum / static_cast<double>(n);
    double var = (sum_sq - static_cast<double>(n) * mean * mean) /
                 std::max(1.0, static_cast<double>(n - 1));
    var = std::max(var, 0.0);
    const double se = std::sqrt(var / static_cast<double>(n));
    return EstimateCI::from_moments(factor * mean, factor * se, n, seed);
}

}  // namespace

EstimateCI EstimateCI::from_moments(double mean, double std_error, long long samples,
                                    uint64_t seed) {
    EstimateCI e;
    e.mean = mean;
    e.std_error = std_error;
    e.samples = samples;
    e.seed = seed;
    e.ci_lo = mean - 1.96 * std_error;
    e.ci_hi = mean + 1.96 * std_error;
    return e;
}

EstimateCI EstimateCI::scaled(double factor) const {
    return from_moments(factor * mean, std::abs(factor) * std_error, samples, seed);
}

double unit_ball_volume(int d) {
    if (d < 0) throw DimensionMismatch("unit_ball_volume: negative dimension");
    return std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

long long default_samples(int nm) { return nm <= 6 ? 100000 : 400000; }

EstimateCI star_volume(const GaugeSpec& gauge, long long samples, uint64_t seed) {
    const int d = gauge.dim;
    auto stats = run_chunks(d, samples, seed, [&](const double* u, ChunkStat& st) {
        const double g = gauge.eval(std::span<const double>(u, static_cast<size_t>(d)));
        if (!(g > 0)) {
            st.nonpositive = true;
            return;
        }
        const double v = std::pow(g, -d);
        st.sum += v;
        st.sum_sq += v * v;
    });
    return reduce_single(stats, samples, seed, unit_ball_volume(d));
}

PairedEstimate star_volume_pair(const GaugeSpec& a, const GaugeSpec& b,
                                long long samples, uint64_t seed) {
    if (a.dim != b.dim) throw DimensionMismatch("star_volume_pair: gauge dims differ");
    const int d = a.dim;
    auto stats = run_chunks(d, samples, seed, [&](const double* u, ChunkStat& st) {
        const std::span<const double> x(u, static_cast<size_t>(d));
        const double ga = a.eval(x);
        const double gb = b.eval(x);
        if (!(ga > 0) || !(gb > 0)) {
            st.nonpositive = true;
            return;
        }
        const double va = std::pow(ga, -d);
        const double vb = std::pow(gb, -d);
        st.sum += va;
        st.sum_sq += va * va;
        st.sum2 += vb;
        st.sum2_sq += vb * vb;
        st.cross += va * vb;
    });

    double s1 = 0, q1 = 0, s2 = 0, q2 = 0, cr = 0;
    bool bad = false;
    for (const auto& st : stats) {
        s1 += st.sum;
        q1 += st.sum_sq;
        s2 += st.sum2;
        q2 += st.sum2_sq;
        cr += st.cross;
        bad = bad || st.nonpositive;
    }
    if (bad) throw GaugeNonPositive("star_volume_pair: gauge not positive on a sample");

    const double nn = static_cast<double>(samples);
    const double m1 = s1 / nn, m2 = s2 / nn;
    const double v1 = std::max(0.0, (q1 - nn * m1 * m1) / std::max(1.0, nn - 1));
    const double v2 = std::max(0.0, (q2 - nn * m2 * m2) / std::max(1.0, nn - 1));
    const double cv = (cr - nn * m1 * m2) / std::max(1.0, nn - 1);

    const double omega = unit_ball_volume(d);
    PairedEstimate pe;
    pe.first = EstimateCI::from_moments(omega * m1, omega * std::sqrt(v1 / nn), samples, seed);
    pe.second = EstimateCI::from_moments(omega * m2, omega * std::sqrt(v2 / nn), samples, seed);
    pe.ratio = m1 / m2;
    const double rel_var =
        v1 / (m1 * m1) + v2 / (m2 * m2) - 2.0 * cv / (m1 * m2);
    pe.ratio_sigma = std::abs(pe.ratio) * std::sqrt(std::max(rel_var, 0.0) / nn);
    return pe;
}

EstimateCI mean_width_constant(int n, int m, long long samples, uint64_t seed) {
    if (n * m > 9) throw ConfigError("mean_width_constant: nm > 9");
    const int d = n * m;
    const SphereRule& rule = sphere_rule(n);
    const double norm = 1.0 / (n * unit_ball_volume(n));
    auto stats = run_chunks(d, samples, seed, [&](const double* theta, ChunkStat& st) {
        // W_n(C_theta_bar) = (1/(n omega_n)) * int max(0, max_i <theta_i, v>) dv
        double integral = 0;
        for (int k = 0; k < rule.count(); ++k) {
            const double* v = rule.nodes.data() + static_cast<size_t>(k) * n;
            double best = 0;
            for (int i = 0; i < m; ++i) {
                double dot = 0;
                for (int kk = 0; kk < n; ++kk) dot += theta[i * n + kk] * v[kk];
                if (dot > best) best = dot;
            }
            integral += rule.weights[k] * best;
        }
        const double w = integral * norm;
        if (!(w > 0)) {
            st.nonpositive = true;
            return;
        }
        const double val = std::pow(w, -d);
        st.sum += val;
        st.sum_sq += val * val;
    });
    return reduce_single(stats, samples, seed, 1.0);
}

EstimateCI petty_upper_constant(int n, int m, long long samples, uint64_t seed) {
    const double prefactor = unit_ball_volume(n * m) /
                             (std::pow(n, n * m) * std::pow(unit_ball_volume(n), m));
    return mean_width_constant(n, m, samples, seed).scaled(prefactor);
}

double zhang_lower_constant(int n, int m) {
    const int top = n * m + n;
    double binom = 1;
    for (int i = 1; i <= n; ++i) binom = binom * (top - n + i) / i;
    return binom / std::pow(n, n * m);
}

}  // namespace hpl
