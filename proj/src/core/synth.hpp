#ifndef LPBOX_CORE_SYNTH_HPP
#define LPBOX_CORE_SYNTH_HPP

#include <cstdint>

#include "core/bundle.hpp"

namespace lpbox {

/// Random BQP: sparse symmetric M with entries in [-1,1] made PSD through
/// make_psd with the power-iteration shift bound, plus m1 cardinality-style
/// equality rows and m2 inequality rows (always feasible by construction).
ProblemBundle gen_random_bqp(std::uint64_t seed, std::size_t n, std::size_t m1, std::size_t m2);

/// 4-neighbor grid labeling instance with nonnegative pairwise weights
/// (submodular for k = 2) and uniform random unary costs.
ProblemBundle gen_grid_mrf(std::uint64_t seed, std::size_t rows, std::size_t cols, std::size_t k);

/// Matching affinities with a planted permutation plus noise.
ProblemBundle gen_matching(std::uint64_t seed, std::size_t n1, std::size_t n2);

/// Equal-size Gaussian blobs in the plane (one blob per cluster).
ProblemBundle gen_clustering(std::uint64_t seed, std::size_t n, std::size_t k);

struct KmeansResult {
    std::vector<int> labels;
    double objective = 0.0;  // tr(Y^T W Y) of the k-means partition
};

/// Lloyd's algorithm with k-means++ seeding on the instance's features.
KmeansResult kmeans_cluster(const ClusteringInstance& inst, std::uint64_t seed);

/// Application-specific starting point:
///   bqp/l1:     0.5 + uniform(-0.1, 0.1) jitter
///   mrf:        indicator of a uniformly random labeling
///   matching:   leading eigenvector of M scaled into [0, 1] (spectral start)
///   clustering: indicator of the k-means partition
/// init_objective (may be null) receives the reported objective of the start
/// when it is an interpretable assignment (mrf labeling, k-means partition),
/// NaN otherwise.
Vec default_init(const ProblemBundle& bundle, std::uint64_t seed,
                 double* init_objective = nullptr);

}  // namespace lpbox

#endif
