#include "core/oracle.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace lpbox {

namespace {

constexpr double kFeasTol = 1e-9;

void record_candidate(OracleResult& out, const Vec& x, double objective, bool maximize) {
    ++out.n_feasible;
    const double sign = maximize ? -1.0 : 1.0;
    if (out.all_optima.empty() || sign * objective < sign * out.best_objective) {
        out.best_objective = objective;
        out.best_x = x;
        out.all_optima.clear();
        out.all_optima.push_back(x);
    } else if (objective == out.best_objective) {
        out.all_optima.push_back(x);
    }
}

void finalize_empty(OracleResult& out) {
    if (out.n_feasible == 0) out.best_objective = std::numeric_limits<double>::quiet_NaN();
}

bool satisfies_constraints(const BqpProblem& p, const Vec& x) {
    if (p.has_eq()) {
        Vec r = spmv(p.C1, x);
        for (std::size_t i = 0; i < r.size(); ++i)
            if (std::abs(r[i] - p.d1[i]) > kFeasTol) return false;
    }
    if (p.has_ineq()) {
        Vec r = spmv(p.C2, x);
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] > p.d2[i] + kFeasTol) return false;
    }
    return true;
}

OracleResult enumerate_binary(const BqpProblem& p, std::size_t n_limit,
                              const std::function<double(const Vec&)>& objective) {
    const std::size_t n = p.n();
    if (n > n_limit)
        throw std::invalid_argument("brute force: n = " + std::to_string(n) +
                                    " exceeds the enumeration limit " + std::to_string(n_limit));
    OracleResult out;
    Vec x(n, 0.0);
    const std::uint64_t total = n >= 64 ? 0 : (1ull << n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> i) & 1u ? 1.0 : 0.0;
        if (!satisfies_constraints(p, x)) continue;
        record_candidate(out, x, objective(x), /*maximize=*/false);
    }
    finalize_empty(out);
    return out;
}

}  // namespace

OracleResult brute_force_bqp(const BqpProblem& p, std::size_t n_limit) {
    p.validate();
    return enumerate_binary(p, n_limit, [&](const Vec& x) { return bqp_objective(p, x); });
}

OracleResult brute_force_l1(const L1Problem& p, std::size_t n_limit) {
    p.validate();
    return enumerate_binary(p.base, n_limit, [&](const Vec& x) { return l1_objective(p, x); });
}

OracleResult brute_force_mrf(const MrfInstance& inst, std::size_t labeling_limit) {
    inst.validate();
    const std::size_t n = inst.n_nodes, k = inst.n_states;
    double space = 1.0;
    for (std::size_t i = 0; i < n; ++i) space *= static_cast<double>(k);
    if (space > static_cast<double>(labeling_limit))
        throw std::invalid_argument("brute_force_mrf: K^n exceeds the enumeration limit");

    const BqpProblem bqp = inst.extra_equalities.empty() ? BqpProblem{} : build_mrf(inst);

    OracleResult out;
    std::vector<int> labels(n, 0);
    Vec x(n * k, 0.0);
    for (;;) {
        for (std::size_t i = 0; i < n * k; ++i) x[i] = 0.0;
        for (std::size_t i = 0; i < n; ++i) x[static_cast<std::size_t>(labels[i]) * n + i] = 1.0;
        const bool ok = inst.extra_equalities.empty() || satisfies_constraints(bqp, x);
        if (ok) record_candidate(out, x, mrf_energy(inst, labels), /*maximize=*/false);

        // next labeling, lexicographic
        std::size_t pos = 0;
        while (pos < n && labels[pos] == static_cast<int>(k) - 1) labels[pos++] = 0;
        if (pos == n) break;
        ++labels[pos];
    }
    finalize_empty(out);
    return out;
}

OracleResult brute_force_matching(const MatchingInstance& inst, std::size_t size_limit) {
    inst.validate();
    if (inst.n1 > size_limit || inst.n2 > size_limit)
        throw std::invalid_argument("brute_force_matching: graph exceeds the size limit " +
                                    std::to_string(size_limit));
    const std::size_t n1 = inst.n1, n2 = inst.n2, n = n1 * n2;

    // dense copy for the objective; independent of the Laplacian reduction
    std::vector<double> dense(n * n, 0.0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = inst.m.row_offsets()[r]; k < inst.m.row_offsets()[r + 1]; ++k)
            dense[r * n + inst.m.col_indices()[k]] = inst.m.values()[k];

    OracleResult out;
    std::vector<int> match(n1, -1);  // match[i] = a or -1
    Vec x(n, 0.0);

    auto evaluate = [&]() {
        for (std::size_t i = 0; i < n; ++i) x[i] = 0.0;
        for (std::size_t i = 0; i < n1; ++i)
            if (match[i] >= 0) x[static_cast<std::size_t>(match[i]) * n1 + i] = 1.0;
        double obj = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (x[j] != 0.0) obj += dense[i * n + j];
        }
        record_candidate(out, x, obj, /*maximize=*/true);
    };

    std::vector<bool> used(n2, false);
    std::function<void(std::size_t)> recurse = [&](std::size_t i) {
        if (i == n1) {
            evaluate();
            return;
        }
        match[i] = -1;
        recurse(i + 1);
        for (std::size_t a = 0; a < n2; ++a) {
            if (used[a]) continue;
            used[a] = true;
            match[i] = static_cast<int>(a);
            recurse(i + 1);
            match[i] = -1;
            used[a] = false;
        }
    };
    recurse(0);
    finalize_empty(out);
    return out;
}

OracleResult brute_force_clustering(const ClusteringInstance& inst,
                                    std::size_t assignment_limit) {
    inst.validate();
    const std::size_t n = inst.n_instances, k = inst.n_clusters;
    double space = 1.0;
    for (std::size_t i = 0; i < n; ++i) space *= static_cast<double>(k);
    if (space > static_cast<double>(assignment_limit))
        throw std::invalid_argument("brute_force_clustering: K^N exceeds the enumeration limit");
    const std::size_t quota = n / k;

    OracleResult out;
    std::vector<int> labels(n, -1);
    std::vector<std::size_t> counts(k, 0);
    Vec x(n * k, 0.0);

    std::function<void(std::size_t)> recurse = [&](std::size_t i) {
        if (i == n) {
            for (std::size_t j = 0; j < n * k; ++j) x[j] = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                x[static_cast<std::size_t>(labels[j]) * n + j] = 1.0;
            record_candidate(out, x, clustering_objective(inst, labels), /*maximize=*/false);
            return;
        }
        for (std::size_t s = 0; s < k; ++s) {
            if (counts[s] == quota) continue;  // equal-size filter
            labels[i] = static_cast<int>(s);
            ++counts[s];
            recurse(i + 1);
            --counts[s];
            labels[i] = -1;
        }
    };
    recurse(0);
    finalize_empty(out);
    return out;
}

}  // namespace lpbox
