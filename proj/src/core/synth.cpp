#include "core/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "core/rng.hpp"

namespace lpbox {

ProblemBundle gen_random_bqp(std::uint64_t seed, std::size_t n, std::size_t m1, std::size_t m2) {
    if (n == 0) throw std::invalid_argument("gen_random_bqp: n must be positive");
    Rng rng = Rng(seed).fork("bqp-instance");

    std::vector<Triplet> entries;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng.uniform() >= 0.35) continue;
            const double v = rng.uniform(-1.0, 1.0);
            entries.push_back({i, j, v});
            entries.push_back({j, i, v});
        }
        if (rng.uniform() < 0.5) entries.push_back({i, i, rng.uniform(-1.0, 1.0)});
    }
    SparseMatrix m = SparseMatrix::from_triplets(n, n, std::move(entries));
    Vec c(n);
    for (double& v : c) v = rng.uniform(-1.0, 1.0);

    const double alpha = psd_shift_bound(m);
    auto [a, b] = make_psd(m, c, alpha);

    BqpProblem p;
    p.A.block = std::move(a);
    p.b = std::move(b);
    p.psd_shift = alpha;

    // each constraint row picks ~n/2 variables with unit coefficients and a
    // right-hand side that keeps the instance feasible
    auto random_row = [&](std::size_t row, std::vector<Triplet>& out) {
        std::vector<std::size_t> support;
        for (std::size_t j = 0; j < n; ++j)
            if (rng.uniform() < 0.5) support.push_back(j);
        if (support.size() < 2) support = {rng.index(n), (rng.index(n - 1) + 1) % n};
        for (std::size_t j : support) out.push_back({row, j, 1.0});
        return support.size();
    };

    if (m1 > 0) {
        std::vector<Triplet> rows;
        Vec d1(m1);
        for (std::size_t r = 0; r < m1; ++r)
            d1[r] = std::floor(static_cast<double>(random_row(r, rows)) / 2.0);
        p.C1 = SparseMatrix::from_triplets(m1, n, std::move(rows));
        p.d1 = std::move(d1);
    }
    if (m2 > 0) {
        std::vector<Triplet> rows;
        Vec d2(m2);
        for (std::size_t r = 0; r < m2; ++r)
            d2[r] = std::ceil(static_cast<double>(random_row(r, rows)) / 2.0);
        p.C2 = SparseMatrix::from_triplets(m2, n, std::move(rows));
        p.d2 = std::move(d2);
    }
    return make_bqp_bundle(std::move(p));
}

ProblemBundle gen_grid_mrf(std::uint64_t seed, std::size_t rows, std::size_t cols,
                           std::size_t k) {
    if (rows == 0 || cols == 0 || k == 0)
        throw std::invalid_argument("gen_grid_mrf: empty grid or state set");
    Rng rng = Rng(seed).fork("mrf-instance");
    const std::size_t n = rows * cols;

    std::vector<Triplet> w;
    w.reserve(4 * n);
    auto at = [cols](std::size_t r, std::size_t c) { return r * cols + c; };
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) {
                const double v = rng.uniform(0.5, 2.0);
                w.push_back({at(r, c), at(r, c + 1), v});
                w.push_back({at(r, c + 1), at(r, c), v});
            }
            if (r + 1 < rows) {
                const double v = rng.uniform(0.5, 2.0);
                w.push_back({at(r, c), at(r + 1, c), v});
                w.push_back({at(r + 1, c), at(r, c), v});
            }
        }

    MrfInstance inst;
    inst.n_nodes = n;
    inst.n_states = k;
    inst.w = SparseMatrix::from_triplets(n, n, std::move(w));
    inst.unary.resize(n * k);
    for (double& u : inst.unary) u = rng.uniform(-1.0, 1.0);
    return make_mrf_bundle(std::move(inst));
}

ProblemBundle gen_matching(std::uint64_t seed, std::size_t n1, std::size_t n2) {
    if (n1 == 0 || n2 == 0) throw std::invalid_argument("gen_matching: empty node set");
    Rng rng = Rng(seed).fork("matching-instance");
    const std::size_t n = n1 * n2;

    // planted permutation: consistent pairs get strong affinity
    std::vector<std::size_t> perm(n2);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n2; i > 1; --i) std::swap(perm[i - 1], perm[rng.index(i)]);

    auto idx = [n1](std::size_t i, std::size_t a) { return a * n1 + i; };
    std::vector<Triplet> entries;
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = i + 1; j < n1; ++j) {
            if (i >= n2 || j >= n2) continue;
            const double v = rng.uniform(1.0, 2.0);
            entries.push_back({idx(i, perm[i]), idx(j, perm[j]), v});
        }
    // background noise
    const std::size_t noise = n;
    for (std::size_t t = 0; t < noise; ++t) {
        const std::size_t a = rng.index(n), b = rng.index(n);
        if (a == b) continue;
        entries.push_back({a, b, rng.uniform(0.0, 0.4)});
    }
    SparseMatrix m = SparseMatrix::from_triplets(n, n, std::move(entries));
    return make_matching_bundle(MatchingInstance::from_similarities(n1, n2, std::move(m)));
}

ProblemBundle gen_clustering(std::uint64_t seed, std::size_t n, std::size_t k) {
    if (k == 0 || n == 0 || n % k != 0)
        throw std::invalid_argument("gen_clustering: K must divide N");
    Rng rng = Rng(seed).fork("clustering-instance");
    const std::size_t per = n / k;

    std::vector<Vec> features;
    features.reserve(n);
    for (std::size_t c = 0; c < k; ++c) {
        const double angle = 2.0 * 3.14159265358979323846 * static_cast<double>(c) /
                             static_cast<double>(k);
        const double cx = 6.0 * std::cos(angle), cy = 6.0 * std::sin(angle);
        for (std::size_t i = 0; i < per; ++i)
            features.push_back({cx + 0.5 * rng.normal(), cy + 0.5 * rng.normal()});
    }
    return make_clustering_bundle(ClusteringInstance::from_features(k, std::move(features)));
}

KmeansResult kmeans_cluster(const ClusteringInstance& inst, std::uint64_t seed) {
    if (inst.features.empty())
        throw std::invalid_argument("kmeans_cluster: instance has no feature vectors");
    Rng rng = Rng(seed).fork("kmeans");
    const std::size_t n = inst.n_instances, k = inst.n_clusters;
    const std::size_t dim = inst.features[0].size();

    auto dist2 = [&](const Vec& a, const Vec& b) {
        double s = 0.0;
        for (std::size_t d = 0; d < a.size(); ++d) s += (a[d] - b[d]) * (a[d] - b[d]);
        return s;
    };

    // k-means++ seeding
    std::vector<Vec> centers;
    centers.push_back(inst.features[rng.index(n)]);
    Vec min_d2(n, std::numeric_limits<double>::infinity());
    while (centers.size() < k) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            min_d2[i] = std::min(min_d2[i], dist2(inst.features[i], centers.back()));
            total += min_d2[i];
        }
        double pick = rng.uniform() * total;
        std::size_t chosen = n - 1;
        for (std::size_t i = 0; i < n; ++i) {
            pick -= min_d2[i];
            if (pick <= 0.0) {
                chosen = i;
                break;
            }
        }
        centers.push_back(inst.features[chosen]);
    }

    std::vector<int> labels(n, 0);
    for (std::size_t iter = 0; iter < 100; ++iter) {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            int best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (std::size_t c = 0; c < k; ++c) {
                const double d = dist2(inst.features[i], centers[c]);
                if (d < best_d) {
                    best_d = d;
                    best = static_cast<int>(c);
                }
            }
            if (labels[i] != best) {
                labels[i] = best;
                changed = true;
            }
        }
        if (!changed && iter > 0) break;
        for (std::size_t c = 0; c < k; ++c) {
            Vec mean(dim, 0.0);
            std::size_t count = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (labels[i] == static_cast<int>(c)) {
                    axpy(1.0, inst.features[i], mean);
                    ++count;
                }
            if (count > 0)
                for (double& v : mean) v /= static_cast<double>(count);
            else
                mean = inst.features[rng.index(n)];  // re-seed an emptied cluster
            centers[c] = std::move(mean);
        }
    }
    return {labels, clustering_objective(inst, labels)};
}

namespace {

// leading eigenvector of the nonnegative affinity matrix, scaled into [0,1]
Vec spectral_start(const MatchingInstance& inst) {
    const std::size_t n = inst.n1 * inst.n2;
    Vec v(n, 1.0), w(n);
    double peak = 0.0;
    for (std::size_t it = 0; it < 50; ++it) {
        spmv(inst.m, v, w);
        peak = norm_inf(w);
        if (peak < 1e-300) return Vec(n, 0.5);
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / peak;
    }
    for (double& x : v) x = std::clamp(x, 0.0, 1.0);
    return v;
}

}  // namespace

Vec default_init(const ProblemBundle& bundle, std::uint64_t seed, double* init_objective) {
    if (init_objective) *init_objective = std::numeric_limits<double>::quiet_NaN();
    Rng rng = Rng(seed).fork("init");
    switch (bundle.kind) {
        case ProblemKind::bqp:
        case ProblemKind::l1: {
            Vec x0(bundle.n());
            for (double& v : x0) v = 0.5 + rng.uniform(-0.1, 0.1);
            return x0;
        }
        case ProblemKind::mrf: {
            const std::size_t n = bundle.dim1, k = bundle.dim2;
            std::vector<int> labels(n);
            for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(rng.index(k));
            Vec x0(n * k, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                x0[static_cast<std::size_t>(labels[i]) * n + i] = 1.0;
            if (init_objective) *init_objective = mrf_energy(*bundle.mrf, labels);
            return x0;
        }
        case ProblemKind::matching: return spectral_start(*bundle.matching);
        case ProblemKind::clustering: {
            const std::size_t n = bundle.dim1, k = bundle.dim2;
            KmeansResult km = kmeans_cluster(*bundle.clustering, seed);
            Vec x0(n * k, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                x0[static_cast<std::size_t>(km.labels[i]) * n + i] = 1.0;
            if (init_objective) *init_objective = km.objective;
            return x0;
        }
    }
    throw std::logic_error("default_init: bad kind");
}

}  // namespace lpbox
