#include "core/bundle.hpp"

#include <cmath>
#include <stdexcept>

namespace lpbox {

const char* to_string(ProblemKind k) {
    switch (k) {
        case ProblemKind::bqp: return "bqp";
        case ProblemKind::l1: return "l1";
        case ProblemKind::mrf: return "mrf";
        case ProblemKind::matching: return "matching";
        case ProblemKind::clustering: return "clustering";
    }
    return "unknown";
}

ProblemBundle make_bqp_bundle(BqpProblem p) {
    ProblemBundle b;
    b.kind = ProblemKind::bqp;
    b.problem.base = std::move(p);
    b.problem.base.validate();
    return b;
}

ProblemBundle make_l1_bundle(L1Problem p) {
    ProblemBundle b;
    b.kind = ProblemKind::l1;
    b.problem = std::move(p);
    b.problem.validate();
    return b;
}

ProblemBundle make_mrf_bundle(MrfInstance inst) {
    ProblemBundle b;
    b.kind = ProblemKind::mrf;
    b.problem.base = build_mrf(inst);
    b.dim1 = inst.n_nodes;
    b.dim2 = inst.n_states;
    b.mrf = std::move(inst);
    return b;
}

ProblemBundle make_matching_bundle(MatchingInstance inst) {
    ProblemBundle b;
    b.kind = ProblemKind::matching;
    b.problem.base = build_matching(inst);
    b.objective_sign = -1.0;  // report the original maximization value x^T M x
    b.dim1 = inst.n1;
    b.dim2 = inst.n2;
    b.matching = std::move(inst);
    return b;
}

ProblemBundle make_clustering_bundle(ClusteringInstance inst) {
    ProblemBundle b;
    b.kind = ProblemKind::clustering;
    b.problem.base = build_clustering(inst);
    b.objective_offset = inst.total_similarity();  // report tr(Y^T W Y)
    b.dim1 = inst.n_instances;
    b.dim2 = inst.n_clusters;
    b.clustering = std::move(inst);
    return b;
}

namespace {

void rewrite_reported(const ProblemBundle& bundle, SolveResult& r) {
    r.objective = bundle.reported(r.objective);
    if (bundle.objective_sign != 1.0 || bundle.objective_offset != 0.0)
        for (IterationRecord& rec : r.trace) rec.objective = bundle.reported(rec.objective);
}

}  // namespace

SolveResult solve_bundle(const ProblemBundle& bundle, const AdmmParams& params, const Vec& x0) {
    SolveResult r = solve_l1(bundle.problem, params, x0);
    rewrite_reported(bundle, r);
    return r;
}

SolveResult solve_bundle_lp(const ProblemBundle& bundle, const AdmmParams& params, const Vec& x0) {
    SolveResult r = solve_lp_relaxation(bundle.problem.base, params, x0);
    rewrite_reported(bundle, r);
    return r;
}

OracleResult oracle_solve(const ProblemBundle& bundle, std::size_t limit) {
    switch (bundle.kind) {
        case ProblemKind::bqp:
            return brute_force_bqp(bundle.problem.base, limit ? limit : 20);
        case ProblemKind::l1:
            return brute_force_l1(bundle.problem, limit ? limit : 20);
        case ProblemKind::mrf:
            return brute_force_mrf(*bundle.mrf, limit ? limit : (1u << 20));
        case ProblemKind::matching:
            return brute_force_matching(*bundle.matching, limit ? limit : 7);
        case ProblemKind::clustering:
            return brute_force_clustering(*bundle.clustering, limit ? limit : 1000000);
    }
    throw std::logic_error("oracle_solve: bad kind");
}

std::vector<int> decode_labels(const ProblemBundle& bundle, const Vec& x) {
    switch (bundle.kind) {
        case ProblemKind::bqp:
        case ProblemKind::l1: {
            std::vector<int> out(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (std::abs(x[i]) > 1e-9 && std::abs(x[i] - 1.0) > 1e-9)
                    throw std::invalid_argument("decode: non-binary entry");
                out[i] = x[i] >= 0.5 ? 1 : 0;
            }
            return out;
        }
        case ProblemKind::mrf: return decode_mrf(x, bundle.dim1, bundle.dim2);
        case ProblemKind::matching: {
            std::vector<int> out(bundle.dim1, -1);
            for (auto [i, a] : decode_matching(x, bundle.dim1, bundle.dim2))
                out[static_cast<std::size_t>(i)] = a;
            return out;
        }
        case ProblemKind::clustering: return decode_clustering(x, bundle.dim1, bundle.dim2);
    }
    throw std::logic_error("decode_labels: bad kind");
}

}  // namespace lpbox
