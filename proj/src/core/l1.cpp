#include "core/l1.hpp"

#include <cmath>
#include <stdexcept>

namespace lpbox {

void L1Problem::validate() const {
    base.validate();
    if (lambda < 0.0) throw std::invalid_argument("L1Problem: lambda must be >= 0");
    if (!(rho0 > 0.0)) throw std::invalid_argument("L1Problem: rho0 must be positive");
    if (!c.empty() && c.n_cols() != base.n())
        throw std::invalid_argument("L1Problem: C column count != n");
}

Vec soft_threshold(const Vec& v, double kappa) {
    if (kappa < 0.0) throw std::invalid_argument("soft_threshold: kappa must be >= 0");
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v[i]) - kappa;
        out[i] = mag > 0.0 ? std::copysign(mag, v[i]) : 0.0;
    }
    return out;
}

double l1_objective(const L1Problem& p, const Vec& x) {
    double obj = bqp_objective(p.base, x);
    if (p.lambda > 0.0 && !p.c.empty()) obj += p.lambda * norm1(spmv(p.c, x));
    return obj;
}

std::size_t l1_x_update(const L1Problem& p, AdmmState& state, const PcgSettings& pcg) {
    BqpXUpdater updater(p.base, p.c.empty() ? nullptr : &p.c);
    return updater.update(state, pcg);
}

void l1_z0_y0_update(const L1Problem& p, AdmmState& state, double gamma) {
    if (state.z0.empty()) return;
    const double rho0 = state.rho0;
    Vec cx = spmv(p.c, state.x);
    Vec point(cx.size());
    for (std::size_t i = 0; i < cx.size(); ++i) point[i] = cx[i] + state.y0[i] / rho0;
    state.z0 = soft_threshold(point, p.lambda / rho0);
    for (std::size_t i = 0; i < cx.size(); ++i)
        state.y0[i] += gamma * rho0 * (cx[i] - state.z0[i]);
}

SolveResult solve_l1(const L1Problem& p, const AdmmParams& params, const Vec& x0) {
    p.validate();

    // lambda = 0 (or no coupling matrix) leaves the l1 term inert; delegate so
    // the trace matches solve_bqp exactly.
    if (p.lambda == 0.0 || p.c.empty()) return solve_bqp(p.base, params, x0);

    const BqpProblem& base = p.base;
    AdmmState init = make_initial_state(base, x0);
    init.z0 = spmv(p.c, x0);
    init.y0 = zeros(p.c.n_rows());
    init.rho0 = p.rho0;

    BqpXUpdater updater(base, &p.c);

    AdmmCallbacks cb;
    cb.x_update = [&](AdmmState& s) { return updater.update(s, params.pcg); };
    cb.extra_update = [&](AdmmState& s) {
        bqp_slack_dual_update(base, s, params.gamma);
        l1_z0_y0_update(p, s, params.gamma);
    };
    cb.objective = [&](const Vec& x) { return l1_objective(p, x); };
    cb.feasibility = [&](const Vec& x) { return feasibility_residuals(base, x); };

    SolveResult r = admm_run(cb, params, std::move(init));

    if (updater.non_converged_solves() > 0) {
        if (!r.message.empty()) r.message += "; ";
        r.message += std::to_string(updater.non_converged_solves()) +
                     " inner PCG solve(s) stopped at the iteration cap";
    }
    if (r.status == SolveStatus::converged && std::max(r.res_eq, r.res_ineq) > 1e-6) {
        r.status = SolveStatus::rounded_infeasible;
        r.converged = false;
    }
    return r;
}

}  // namespace lpbox
