#ifndef LPBOX_CORE_PROBLEMS_HPP
#define LPBOX_CORE_PROBLEMS_HPP

#include <utility>
#include <vector>

#include "core/bqp.hpp"

namespace lpbox {

/// Pairwise labeling energy over a similarity graph: K states per node, the
/// indicator vector is laid out in state blocks (all nodes for state 0, then
/// state 1, ...).
struct MrfInstance {
    std::size_t n_nodes = 0;
    std::size_t n_states = 0;
    SparseMatrix w;  // symmetric, nonnegative, zero diagonal
    Vec unary;       // length n_nodes * n_states, state-block order
    std::vector<std::pair<SparseMatrix, Vec>> extra_equalities;

    void validate() const;
};

/// Pairwise matching affinities between two node sets; x_{ia} lives at index
/// a*n1 + i. Build via from_similarities so M is symmetrized on load.
struct MatchingInstance {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    SparseMatrix m;  // (n1*n2) x (n1*n2), symmetric nonnegative

    static MatchingInstance from_similarities(std::size_t n1, std::size_t n2, SparseMatrix m);
    void validate() const;
};

/// Equal-size clustering of N instances into K clusters under the
/// log-distance similarity W_ij = log(||r_i - r_j||^2). The membership matrix
/// is vectorized column-major: Y_{ik} lives at index k*N + i.
struct ClusteringInstance {
    std::size_t n_instances = 0;
    std::size_t n_clusters = 0;
    std::vector<Vec> features;  // optional; needed for k-means initialization
    SparseMatrix w;
    bool had_duplicates = false;  // duplicate points clamped to log(eps^2)

    static ClusteringInstance from_features(std::size_t k, std::vector<Vec> features);
    void validate() const;

    /// Sum of all W entries; tr(Y^T W Y) = y^T (I_K ⊗ L) y + this on feasible
    /// binary assignments.
    double total_similarity() const;
};

BqpProblem build_mrf(const MrfInstance& inst);
BqpProblem build_matching(const MatchingInstance& inst);
BqpProblem build_clustering(const ClusteringInstance& inst);

/// Per-node state labels (0-based). Throws if x is not a feasible one-hot
/// labeling.
std::vector<int> decode_mrf(const Vec& x, std::size_t n_nodes, std::size_t n_states);

/// Matched (i, a) pairs, 0-based. Throws if x violates the one-to-one rows.
std::vector<std::pair<int, int>> decode_matching(const Vec& x, std::size_t n1, std::size_t n2);

/// Per-instance cluster ids (0-based). Throws on an infeasible assignment.
std::vector<int> decode_clustering(const Vec& x, std::size_t n, std::size_t k);

/// Direct Potts-energy evaluation of a labeling (independent of the BQP
/// reduction): sum_{i != j} W_ij [l_i != l_j] + sum_i unary(l_i, i).
double mrf_energy(const MrfInstance& inst, const std::vector<int>& labels);

/// tr(Y^T W Y) of a cluster assignment, evaluated directly on W.
double clustering_objective(const ClusteringInstance& inst, const std::vector<int>& labels);

}  // namespace lpbox

#endif
