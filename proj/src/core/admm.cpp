#include "core/admm.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "core/projections.hpp"

namespace lpbox {

void AdmmParams::validate() const {
    if (!(rho1 > 0.0) || !(rho2 > 0.0) || !(rho3 > 0.0) || !(rho4 > 0.0))
        throw std::invalid_argument("AdmmParams: initial penalties must be positive");
    if (!(mu >= 1.0)) throw std::invalid_argument("AdmmParams: mu must be >= 1");
    if (!std::isfinite(rho_max) || !(rho_max > 0.0))
        throw std::invalid_argument("AdmmParams: rho_max must be finite and positive");
    if (!(gamma > 0.0) || gamma > 1.0)
        throw std::invalid_argument("AdmmParams: gamma must be in (0, 1]");
    if (!(stop_tol >= 0.0)) throw std::invalid_argument("AdmmParams: stop_tol must be >= 0");
    if (!(binarize_tol >= 0.0))
        throw std::invalid_argument("AdmmParams: binarize_tol must be >= 0");
}

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::converged: return "converged";
        case SolveStatus::max_iterations: return "max_iterations";
        case SolveStatus::not_binary: return "not_binary";
        case SolveStatus::rounded_infeasible: return "rounded_infeasible";
        case SolveStatus::numerical_error: return "numerical_error";
    }
    return "unknown";
}

Vec dual_ascent_step(const Vec& y, const Vec& residual, double gamma, double rho) {
    if (y.size() != residual.size())
        throw std::invalid_argument("dual_ascent_step: length mismatch");
    Vec out(y);
    axpy(gamma * rho, residual, out);
    return out;
}

std::optional<Vec> binarize(const Vec& x, double tol) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = x[i] >= 0.5 ? 1.0 : 0.0;
        if (std::abs(x[i] - r) > tol) return std::nullopt;
        out[i] = r;
    }
    return out;
}

namespace {

Vec round_at_half(const Vec& x) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] >= 0.5 ? 1.0 : 0.0;
    return out;
}

void finalize(SolveResult& result, const AdmmCallbacks& cb, const AdmmState& state) {
    result.x_continuous = state.x;
    result.iterations = state.k;
    if (result.x.empty()) result.x = state.x;
    result.objective = cb.objective(result.x);
    auto [req, rineq] = cb.feasibility(result.x);
    result.res_eq = req;
    result.res_ineq = rineq;
    result.binariness = binariness_inf(result.x);
}

}  // namespace

SolveResult admm_run(const AdmmCallbacks& cb, const AdmmParams& params, AdmmState state) {
    params.validate();
    if (!cb.x_update || !cb.objective || !cb.feasibility)
        throw std::invalid_argument("admm_run: x_update, objective and feasibility are required");

    const std::size_t n = state.x.size();
    if (state.z1.size() != n || state.y1.size() != n)
        throw std::invalid_argument("admm_run: z1/y1 must match the x dimension");
    if (cb.sphere_enabled && (state.z2.size() != n || state.y2.size() != n))
        throw std::invalid_argument("admm_run: z2/y2 must match the x dimension");
    if (state.z2.size() != n) state.z2.assign(n, 0.0);
    if (state.y2.size() != n) state.y2.assign(n, 0.0);
    const double stop_threshold = params.stop_tol * std::sqrt(static_cast<double>(n));
    const std::size_t freeze_at = params.y2_freeze_at.value_or(params.max_iterations / 2);

    state.rho = {params.rho1, cb.sphere_enabled ? params.rho2 : 0.0, params.rho3, params.rho4};
    state.k = 0;

    SolveResult result;
    result.trace.reserve(std::min<std::size_t>(params.max_iterations, 4096));

    Vec tmp(n), r1(n), r2(n);
    bool residual_converged = false;

    for (std::size_t k = 0; k < params.max_iterations; ++k) {
        std::size_t pcg_iters = 0;
        try {
            pcg_iters = cb.x_update(state);
        } catch (const std::exception& e) {
            result.status = SolveStatus::numerical_error;
            result.message = "x-update failed at iteration " + std::to_string(k) + ": " + e.what();
            finalize(result, cb, state);
            return result;
        }
        if (!all_finite(state.x)) {
            result.status = SolveStatus::numerical_error;
            result.message = "non-finite iterate at iteration " + std::to_string(k);
            finalize(result, cb, state);
            return result;
        }

        // z-block: projections use the duals from the previous iteration
        for (std::size_t i = 0; i < n; ++i) tmp[i] = state.x[i] + state.y1[i] / state.rho[0];
        state.z1 = project_box(tmp);
        if (cb.sphere_enabled) {
            for (std::size_t i = 0; i < n; ++i) tmp[i] = state.x[i] + state.y2[i] / state.rho[1];
            state.z2 = project_sphere(tmp);
        }

        if (cb.extra_update) cb.extra_update(state);

        // dual ascent
        for (std::size_t i = 0; i < n; ++i) r1[i] = state.x[i] - state.z1[i];
        axpy(params.gamma * state.rho[0], r1, state.y1);
        double res_z2 = 0.0;
        if (cb.sphere_enabled) {
            for (std::size_t i = 0; i < n; ++i) r2[i] = state.x[i] - state.z2[i];
            if (k < freeze_at) axpy(params.gamma * state.rho[1], r2, state.y2);
            res_z2 = norm2(r2);
        }
        const double res_z1 = norm2(r1);

        IterationRecord rec;
        rec.k = k;
        rec.objective = cb.objective(state.x);
        rec.res_z1 = res_z1;
        rec.res_z2 = res_z2;
        auto [req, rineq] = cb.feasibility(state.x);
        rec.res_eq = req;
        rec.res_ineq = rineq;
        rec.binariness = binariness_inf(state.x);
        rec.pcg_iters = pcg_iters;
        result.trace.push_back(rec);

        state.k = k + 1;
        if (cb.on_iteration) cb.on_iteration(state, rec);

        for (double& r : state.rho) r = std::min(params.mu * r, params.rho_max);
        if (!state.z0.empty()) state.rho0 = std::min(params.mu * state.rho0, params.rho_max);

        if (std::max(res_z1, res_z2) <= stop_threshold) {
            residual_converged = true;
            break;
        }
    }

    if (residual_converged) {
        if (cb.rounding == Rounding::threshold_half) {
            result.x = round_at_half(state.x);
            result.converged = true;
            result.status = SolveStatus::converged;
        } else if (auto bin = binarize(state.x, params.binarize_tol)) {
            result.x = std::move(*bin);
            result.converged = true;
            result.status = SolveStatus::converged;
        } else {
            result.status = SolveStatus::not_binary;
            result.message = "residuals converged but iterate is not binary within tol " +
                             std::to_string(params.binarize_tol);
        }
    } else {
        result.status = SolveStatus::max_iterations;
    }

    finalize(result, cb, state);
    return result;
}

void write_trace_csv(std::ostream& out, const std::vector<IterationRecord>& trace) {
    out << "k,objective,res_z1,res_z2,res_eq,res_ineq,binariness,pcg_iters\n";
    char buf[256];
    for (const IterationRecord& r : trace) {
        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%zu", r.k,
                      r.objective, r.res_z1, r.res_z2, r.res_eq, r.res_ineq, r.binariness,
                      r.pcg_iters);
        out << buf << "\n";
    }
}

}  // namespace lpbox
