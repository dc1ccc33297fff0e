#ifndef LPBOX_CORE_ORACLE_HPP
#define LPBOX_CORE_ORACLE_HPP

#include "core/l1.hpp"
#include "core/problems.hpp"

namespace lpbox {

/// Exhaustive ground truth. best_objective is in the problem's natural sense
/// (min for BQP/MRF/clustering, max for matching); all exact ties are kept so
/// a solver result can be matched against any optimum. n_feasible == 0 means
/// the feasible set is empty (best_x empty, best_objective NaN) — reported,
/// not thrown.
struct OracleResult {
    Vec best_x;
    double best_objective = 0.0;
    std::size_t n_feasible = 0;
    std::vector<Vec> all_optima;
};

/// Enumerates all 2^n binary vectors, filtering by C1 x = d1 and C2 x <= d2
/// with tolerance 1e-9. Throws if n exceeds n_limit.
OracleResult brute_force_bqp(const BqpProblem& p, std::size_t n_limit = 20);

/// Same enumeration with objective f(x) + lambda ||C x||_1.
OracleResult brute_force_l1(const L1Problem& p, std::size_t n_limit = 20);

/// Enumerates all K^n_nodes labelings; energies are evaluated directly on
/// (W, unary), independent of the BQP reduction. extra_equalities filter the
/// indicator vector exactly.
OracleResult brute_force_mrf(const MrfInstance& inst, std::size_t labeling_limit = 1u << 20);

/// Enumerates all partial one-to-one assignments, maximizing x^T M x.
/// Requires n1, n2 <= size_limit.
OracleResult brute_force_matching(const MatchingInstance& inst, std::size_t size_limit = 7);

/// Enumerates equal-size cluster assignments, minimizing tr(Y^T W Y).
/// Requires K^N <= assignment_limit before the equal-size filter.
OracleResult brute_force_clustering(const ClusteringInstance& inst,
                                    std::size_t assignment_limit = 1000000);

}  // namespace lpbox

#endif
