#ifndef LPBOX_CORE_BUNDLE_HPP
#define LPBOX_CORE_BUNDLE_HPP

#include <optional>

#include "core/l1.hpp"
#include "core/oracle.hpp"
#include "core/problems.hpp"

namespace lpbox {

enum class ProblemKind { bqp, l1, mrf, matching, clustering };

const char* to_string(ProblemKind k);

/// A solvable problem plus the bookkeeping needed to report objectives in the
/// application's original sense and to decode solutions. problem.base is the
/// canonical BQP; the l1 coupling is active only for kind == l1.
///
/// reported objective = objective_sign * f(x) + objective_offset
///   matching:   sign -1 (the reduction minimizes -x^T M x + const)
///   clustering: offset sum(W) (tr(Y^T W Y) = y^T L1bar y + sum W on feasible y)
struct ProblemBundle {
    ProblemKind kind = ProblemKind::bqp;
    L1Problem problem;
    double objective_sign = 1.0;
    double objective_offset = 0.0;
    std::size_t dim1 = 0;  // mrf: n_nodes, matching: n1, clustering: N
    std::size_t dim2 = 0;  // mrf: K,       matching: n2, clustering: K

    std::optional<MrfInstance> mrf;
    std::optional<MatchingInstance> matching;
    std::optional<ClusteringInstance> clustering;

    std::size_t n() const { return problem.base.n(); }
    double reported(double raw_objective) const {
        return objective_sign * raw_objective + objective_offset;
    }
};

ProblemBundle make_bqp_bundle(BqpProblem p);
ProblemBundle make_l1_bundle(L1Problem p);
ProblemBundle make_mrf_bundle(MrfInstance inst);
ProblemBundle make_matching_bundle(MatchingInstance inst);
ProblemBundle make_clustering_bundle(ClusteringInstance inst);

/// Solves and rewrites objective/trace into the reported sense.
SolveResult solve_bundle(const ProblemBundle& bundle, const AdmmParams& params, const Vec& x0);

/// Box-relaxation baseline, same reporting convention.
SolveResult solve_bundle_lp(const ProblemBundle& bundle, const AdmmParams& params, const Vec& x0);

/// Kind-dispatched brute force; best_objective is already in the reported
/// sense. limit == 0 uses the per-kind default.
OracleResult oracle_solve(const ProblemBundle& bundle, std::size_t limit = 0);

/// Decoded labels: mrf/clustering -> one label per item; matching -> matched
/// target per left node or -1; bqp/l1 -> the binary entries themselves.
std::vector<int> decode_labels(const ProblemBundle& bundle, const Vec& x);

}  // namespace lpbox

#endif
