#include "core/problems.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lpbox {

namespace {

constexpr double kSymTol = 1e-12;
constexpr double kDuplicateEps = 1e-8;

void check_similarity_matrix(const SparseMatrix& w, std::size_t n, const char* who,
                             bool require_nonneg) {
    if (w.n_rows() != n || w.n_cols() != n)
        throw std::invalid_argument(std::string(who) + ": W must be " + std::to_string(n) + "x" +
                                    std::to_string(n));
    if (!w.is_symmetric(kSymTol))
        throw std::invalid_argument(std::string(who) + ": W is not symmetric");
    if (require_nonneg) {
        for (double v : w.values())
            if (v < 0.0)
                throw std::invalid_argument(std::string(who) + ": W has a negative entry");
    }
}

void check_zero_diagonal(const SparseMatrix& w, const char* who) {
    for (double d : w.diagonal_vector())
        if (std::abs(d) > kSymTol)
            throw std::invalid_argument(std::string(who) + ": W must have a zero diagonal");
}

// L = D - W with D = diag(W 1); PSD for symmetric nonnegative W.
SparseMatrix graph_laplacian(const SparseMatrix& w) {
    const std::size_t n = w.n_rows();
    Vec deg = w.row_sums();
    std::vector<Triplet> t;
    t.reserve(w.nnz() + n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = w.row_offsets()[r]; k < w.row_offsets()[r + 1]; ++k)
            t.push_back({r, w.col_indices()[k], -w.values()[k]});
    for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, deg[i]});
    return SparseMatrix::from_triplets(n, n, std::move(t));
}

}  // namespace

void MrfInstance::validate() const {
    if (n_nodes == 0 || n_states == 0)
        throw std::invalid_argument("MrfInstance: empty node or state set");
    check_similarity_matrix(w, n_nodes, "MrfInstance", /*require_nonneg=*/true);
    check_zero_diagonal(w, "MrfInstance");
    if (unary.size() != n_nodes * n_states)
        throw std::invalid_argument("MrfInstance: unary length != n_nodes * n_states");
    const std::size_t n = n_nodes * n_states;
    for (const auto& [c, d] : extra_equalities) {
        if (c.n_cols() != n)
            throw std::invalid_argument("MrfInstance: extra equality column count != n");
        if (d.size() != c.n_rows())
            throw std::invalid_argument("MrfInstance: extra equality rhs length mismatch");
    }
}

BqpProblem build_mrf(const MrfInstance& inst) {
    inst.validate();
    const std::size_t n = inst.n_nodes;
    const std::size_t k = inst.n_states;

    BqpProblem p;
    p.A.block = graph_laplacian(inst.w);
    p.A.kron_blocks = k;
    p.b = inst.unary;

    // one-state-per-node rows, then any extra equality rows
    std::vector<Triplet> c1;
    c1.reserve(n * k);
    std::size_t rows = n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < k; ++s) c1.push_back({i, s * n + i, 1.0});
    Vec d1 = ones(n);
    for (const auto& [c, d] : inst.extra_equalities) {
        for (std::size_t r = 0; r < c.n_rows(); ++r)
            for (std::size_t j = c.row_offsets()[r]; j < c.row_offsets()[r + 1]; ++j)
                c1.push_back({rows + r, c.col_indices()[j], c.values()[j]});
        d1.insert(d1.end(), d.begin(), d.end());
        rows += c.n_rows();
    }
    p.C1 = SparseMatrix::from_triplets(rows, n * k, std::move(c1));
    p.d1 = std::move(d1);
    return p;
}

MatchingInstance MatchingInstance::from_similarities(std::size_t n1, std::size_t n2,
                                                     SparseMatrix m) {
    const std::size_t n = n1 * n2;
    if (m.n_rows() != n || m.n_cols() != n)
        throw std::invalid_argument("MatchingInstance: M must be (n1*n2) x (n1*n2)");
    // symmetrize: (M + M^T) / 2
    std::vector<Triplet> t;
    t.reserve(2 * m.nnz());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = m.row_offsets()[r]; k < m.row_offsets()[r + 1]; ++k) {
            t.push_back({r, m.col_indices()[k], 0.5 * m.values()[k]});
            t.push_back({m.col_indices()[k], r, 0.5 * m.values()[k]});
        }
    MatchingInstance inst;
    inst.n1 = n1;
    inst.n2 = n2;
    inst.m = SparseMatrix::from_triplets(n, n, std::move(t));
    inst.validate();
    return inst;
}

void MatchingInstance::validate() const {
    if (n1 == 0 || n2 == 0) throw std::invalid_argument("MatchingInstance: empty node set");
    check_similarity_matrix(m, n1 * n2, "MatchingInstance", /*require_nonneg=*/true);
}

BqpProblem build_matching(const MatchingInstance& inst) {
    inst.validate();
    const std::size_t n1 = inst.n1, n2 = inst.n2, n = n1 * n2;

    BqpProblem p;
    p.A.block = graph_laplacian(inst.m);  // max x^T M x == min x^T L x - d^T x on binary x
    Vec deg = inst.m.row_sums();
    p.b.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.b[i] = -deg[i];

    // one-to-one rows: [1^T_{n2} ⊗ I_{n1}; I_{n2} ⊗ 1^T_{n1}]
    std::vector<Triplet> c2;
    c2.reserve(2 * n);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t a = 0; a < n2; ++a) c2.push_back({i, a * n1 + i, 1.0});
    for (std::size_t a = 0; a < n2; ++a)
        for (std::size_t i = 0; i < n1; ++i) c2.push_back({n1 + a, a * n1 + i, 1.0});
    p.C2 = SparseMatrix::from_triplets(n1 + n2, n, std::move(c2));
    p.d2 = ones(n1 + n2);
    return p;
}

ClusteringInstance ClusteringInstance::from_features(std::size_t k, std::vector<Vec> features) {
    const std::size_t n = features.size();
    if (n == 0) throw std::invalid_argument("ClusteringInstance: no features");
    const std::size_t dim = features[0].size();
    for (const Vec& f : features)
        if (f.size() != dim)
            throw std::invalid_argument("ClusteringInstance: inconsistent feature dimensions");

    ClusteringInstance inst;
    inst.n_instances = n;
    inst.n_clusters = k;

    std::vector<Triplet> t;
    t.reserve(n * (n - 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double dist2 = 0.0;
            for (std::size_t d = 0; d < dim; ++d) {
                const double diff = features[i][d] - features[j][d];
                dist2 += diff * diff;
            }
            double wij;
            if (dist2 == 0.0) {
                wij = std::log(kDuplicateEps * kDuplicateEps);
                inst.had_duplicates = true;
            } else {
                wij = std::log(dist2);
            }
            t.push_back({i, j, wij});
            t.push_back({j, i, wij});
        }
    inst.w = SparseMatrix::from_triplets(n, n, std::move(t));
    inst.features = std::move(features);
    inst.validate();
    return inst;
}

void ClusteringInstance::validate() const {
    if (n_instances == 0 || n_clusters == 0)
        throw std::invalid_argument("ClusteringInstance: empty instance or cluster set");
    if (n_instances % n_clusters != 0)
        throw std::invalid_argument("ClusteringInstance: K must divide N (equal-size clusters; N=" +
                                    std::to_string(n_instances) + ", K=" +
                                    std::to_string(n_clusters) + ")");
    check_similarity_matrix(w, n_instances, "ClusteringInstance", /*require_nonneg=*/false);
    check_zero_diagonal(w, "ClusteringInstance");
}

double ClusteringInstance::total_similarity() const {
    double s = 0.0;
    for (double v : w.values()) s += v;
    return s;
}

BqpProblem build_clustering(const ClusteringInstance& inst) {
    inst.validate();
    const std::size_t n = inst.n_instances, k = inst.n_clusters;

    // L = D + W with d_i = -sum_j W_ij. Log-distance similarities can push
    // eigenvalues of L negative (distances above 1 give positive W entries),
    // so the block is shifted PSD up front; the shift is exact on binary
    // points through the compensating linear term.
    Vec deg = inst.w.row_sums();
    std::vector<Triplet> t;
    t.reserve(inst.w.nnz() + n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = inst.w.row_offsets()[r]; j < inst.w.row_offsets()[r + 1]; ++j)
            t.push_back({r, inst.w.col_indices()[j], inst.w.values()[j]});
    for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, -deg[i]});
    SparseMatrix l = SparseMatrix::from_triplets(n, n, std::move(t));

    const double alpha = psd_shift_bound(l);
    BqpProblem p;
    if (alpha > 0.0) {
        auto [shifted, unused] = make_psd(l, zeros(n), alpha);
        (void)unused;
        p.A.block = std::move(shifted);
        p.psd_shift = alpha;
        p.b.assign(n * k, -alpha);
    } else {
        p.A.block = std::move(l);
        p.b = zeros(n * k);
    }
    p.A.kron_blocks = k;

    // [I_K ⊗ 1^T_N; 1^T_K ⊗ I_N]: cluster sizes N/K, one cluster per instance
    std::vector<Triplet> c1;
    c1.reserve(2 * n * k);
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t i = 0; i < n; ++i) c1.push_back({s, s * n + i, 1.0});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < k; ++s) c1.push_back({k + i, s * n + i, 1.0});
    p.C1 = SparseMatrix::from_triplets(k + n, n * k, std::move(c1));
    p.d1.assign(k, static_cast<double>(n) / static_cast<double>(k));
    Vec row_part = ones(n);
    p.d1.insert(p.d1.end(), row_part.begin(), row_part.end());
    return p;
}

namespace {

bool is_one(double v) { return std::abs(v - 1.0) <= 1e-9; }
bool is_zero(double v) { return std::abs(v) <= 1e-9; }

int one_hot_label(const Vec& x, std::size_t item, std::size_t block_len, std::size_t n_blocks,
                  const char* who) {
    int label = -1;
    for (std::size_t s = 0; s < n_blocks; ++s) {
        const double v = x[s * block_len + item];
        if (is_one(v)) {
            if (label >= 0)
                throw std::invalid_argument(std::string(who) + ": item " + std::to_string(item) +
                                            " selected more than once");
            label = static_cast<int>(s);
        } else if (!is_zero(v)) {
            throw std::invalid_argument(std::string(who) + ": non-binary entry");
        }
    }
    if (label < 0)
        throw std::invalid_argument(std::string(who) + ": item " + std::to_string(item) +
                                    " has no selection");
    return label;
}

}  // namespace

std::vector<int> decode_mrf(const Vec& x, std::size_t n_nodes, std::size_t n_states) {
    if (x.size() != n_nodes * n_states)
        throw std::invalid_argument("decode_mrf: x length != n_nodes * n_states");
    std::vector<int> labels(n_nodes);
    for (std::size_t i = 0; i < n_nodes; ++i)
        labels[i] = one_hot_label(x, i, n_nodes, n_states, "decode_mrf");
    return labels;
}

std::vector<std::pair<int, int>> decode_matching(const Vec& x, std::size_t n1, std::size_t n2) {
    if (x.size() != n1 * n2) throw std::invalid_argument("decode_matching: x length != n1 * n2");
    std::vector<bool> used_a(n2, false);
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < n1; ++i) {
        int match = -1;
        for (std::size_t a = 0; a < n2; ++a) {
            const double v = x[a * n1 + i];
            if (is_one(v)) {
                if (match >= 0)
                    throw std::invalid_argument("decode_matching: node " + std::to_string(i) +
                                                " matched more than once");
                match = static_cast<int>(a);
            } else if (!is_zero(v)) {
                throw std::invalid_argument("decode_matching: non-binary entry");
            }
        }
        if (match >= 0) {
            if (used_a[static_cast<std::size_t>(match)])
                throw std::invalid_argument("decode_matching: target " + std::to_string(match) +
                                            " matched more than once");
            used_a[static_cast<std::size_t>(match)] = true;
            pairs.emplace_back(static_cast<int>(i), match);
        }
    }
    return pairs;
}

std::vector<int> decode_clustering(const Vec& x, std::size_t n, std::size_t k) {
    if (x.size() != n * k) throw std::invalid_argument("decode_clustering: x length != N * K");
    std::vector<int> labels(n);
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = one_hot_label(x, i, n, k, "decode_clustering");
        ++counts[static_cast<std::size_t>(labels[i])];
    }
    for (std::size_t s = 0; s < k; ++s)
        if (counts[s] != n / k)
            throw std::invalid_argument("decode_clustering: cluster " + std::to_string(s) +
                                        " has size " + std::to_string(counts[s]) +
                                        ", expected " + std::to_string(n / k));
    return labels;
}

double mrf_energy(const MrfInstance& inst, const std::vector<int>& labels) {
    if (labels.size() != inst.n_nodes)
        throw std::invalid_argument("mrf_energy: label count != n_nodes");
    double e = 0.0;
    const auto& w = inst.w;
    for (std::size_t r = 0; r < w.n_rows(); ++r)
        for (std::size_t k = w.row_offsets()[r]; k < w.row_offsets()[r + 1]; ++k)
            if (labels[r] != labels[w.col_indices()[k]]) e += w.values()[k];
    for (std::size_t i = 0; i < inst.n_nodes; ++i)
        e += inst.unary[static_cast<std::size_t>(labels[i]) * inst.n_nodes + i];
    return e;
}

double clustering_objective(const ClusteringInstance& inst, const std::vector<int>& labels) {
    if (labels.size() != inst.n_instances)
        throw std::invalid_argument("clustering_objective: label count != N");
    double obj = 0.0;
    const auto& w = inst.w;
    for (std::size_t r = 0; r < w.n_rows(); ++r)
        for (std::size_t k = w.row_offsets()[r]; k < w.row_offsets()[r + 1]; ++k)
            if (labels[r] == labels[w.col_indices()[k]]) obj += w.values()[k];
    return obj;
}

}  // namespace lpbox
