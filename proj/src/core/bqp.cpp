#include "core/bqp.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "core/projections.hpp"

namespace lpbox {

void QuadraticTerm::apply(const Vec& v, Vec& out) const {
    kron_identity_apply(kron_blocks, block, v, out);
}

Vec QuadraticTerm::apply(const Vec& v) const {
    Vec out;
    apply(v, out);
    return out;
}

Vec QuadraticTerm::diagonal() const {
    const Vec d = block.diagonal_vector();
    Vec out;
    out.reserve(kron_blocks * d.size());
    for (std::size_t b = 0; b < kron_blocks; ++b) out.insert(out.end(), d.begin(), d.end());
    return out;
}

void BqpProblem::validate() const {
    const std::size_t dim = n();
    if (A.block.n_rows() != A.block.n_cols())
        throw std::invalid_argument("BqpProblem: A block is not square");
    if (A.dimension() != dim)
        throw std::invalid_argument("BqpProblem: A is " + std::to_string(A.dimension()) +
                                    "-dimensional but b has length " + std::to_string(dim));
    if (!A.block.is_symmetric(1e-12))
        throw std::invalid_argument("BqpProblem: A is not symmetric (tolerance 1e-12)");
    if (has_eq()) {
        if (C1.n_cols() != dim) throw std::invalid_argument("BqpProblem: C1 column count != n");
        if (d1.size() != C1.n_rows())
            throw std::invalid_argument("BqpProblem: d1 length != C1 row count");
    }
    if (has_ineq()) {
        if (C2.n_cols() != dim) throw std::invalid_argument("BqpProblem: C2 column count != n");
        if (d2.size() != C2.n_rows())
            throw std::invalid_argument("BqpProblem: d2 length != C2 row count");
    }
    if (psd_shift < 0.0) throw std::invalid_argument("BqpProblem: psd_shift must be >= 0");
}

std::pair<SparseMatrix, Vec> make_psd(const SparseMatrix& m, const Vec& c, double alpha) {
    if (m.n_rows() != m.n_cols()) throw std::invalid_argument("make_psd: M is not square");
    if (c.size() != m.n_rows()) throw std::invalid_argument("make_psd: c length != M dimension");
    if (!m.is_symmetric(1e-12)) throw std::invalid_argument("make_psd: M is not symmetric");
    if (alpha == 0.0) return {m, c};

    std::vector<Triplet> t;
    t.reserve(m.nnz() + m.n_rows());
    for (std::size_t r = 0; r < m.n_rows(); ++r)
        for (std::size_t k = m.row_offsets()[r]; k < m.row_offsets()[r + 1]; ++k)
            t.push_back({r, m.col_indices()[k], m.values()[k]});
    for (std::size_t i = 0; i < m.n_rows(); ++i) t.push_back({i, i, alpha});

    Vec b(c);
    for (double& v : b) v -= alpha;
    return {SparseMatrix::from_triplets(m.n_rows(), m.n_cols(), std::move(t)), std::move(b)};
}

namespace {

// Rayleigh quotient of the dominant eigenpair of (-M - shift*I).
double dominant_rayleigh(const SparseMatrix& m, double shift, std::size_t iterations) {
    const std::size_t n = m.n_rows();
    Vec v(n), w(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + static_cast<double>(i % 7) / 7.0;
    double inv = 1.0 / norm2(v);
    for (double& x : v) x *= inv;

    double lambda = 0.0;
    for (std::size_t it = 0; it < iterations; ++it) {
        spmv(m, v, w);
        for (std::size_t i = 0; i < n; ++i) w[i] = -w[i] - shift * v[i];
        lambda = dot(v, w);
        const double wn = norm2(w);
        if (wn < 1e-300) return lambda;
        inv = 1.0 / wn;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] * inv;
    }
    return lambda;
}

}  // namespace

double psd_shift_bound(const SparseMatrix& m, std::size_t power_iterations) {
    if (m.n_rows() == 0 || m.nnz() == 0) return 0.0;
    const std::size_t half = std::max<std::size_t>(1, power_iterations / 2);
    // mu1 -> signed dominant eigenvalue of -M; the shifted second pass
    // recovers -lambda_min(M) when the positive end of the spectrum dominates.
    const double mu1 = dominant_rayleigh(m, 0.0, half);
    const double mu2 = dominant_rayleigh(m, mu1, half);
    const double neg_lambda_min = std::max(mu1, mu1 + mu2);
    return neg_lambda_min > 0.0 ? 1.1 * neg_lambda_min : 0.0;
}

double bqp_objective(const BqpProblem& p, const Vec& x) {
    if (x.size() != p.n())
        throw std::invalid_argument("bqp_objective: x length " + std::to_string(x.size()) +
                                    " != n " + std::to_string(p.n()));
    Vec ax = p.A.apply(x);
    return dot(x, ax) + dot(p.b, x);
}

std::pair<double, double> feasibility_residuals(const BqpProblem& p, const Vec& x) {
    double req = 0.0, rineq = 0.0;
    if (p.has_eq()) {
        Vec r = spmv(p.C1, x);
        for (std::size_t i = 0; i < r.size(); ++i) {
            const double d = r[i] - p.d1[i];
            req += d * d;
        }
        req = std::sqrt(req);
    }
    if (p.has_ineq()) {
        Vec r = spmv(p.C2, x);
        for (std::size_t i = 0; i < r.size(); ++i) {
            const double d = std::max(r[i] - p.d2[i], 0.0);
            rineq += d * d;
        }
        rineq = std::sqrt(rineq);
    }
    return {req, rineq};
}

BqpXUpdater::BqpXUpdater(const BqpProblem& p, const SparseMatrix* l1_coupling)
    : p_(&p), l1_c_(l1_coupling) {
    diag_a_ = p.A.diagonal();
    if (p.has_eq()) c1_colsq_ = p.C1.column_squared_norms();
    if (p.has_ineq()) c2_colsq_ = p.C2.column_squared_norms();
    if (l1_c_ && !l1_c_->empty()) c0_colsq_ = l1_c_->column_squared_norms();
    const std::size_t n = p.n();
    rhs_.resize(n);
    diag_.resize(n);
    t_n_.resize(n);
}

std::size_t BqpXUpdater::update(AdmmState& state, const PcgSettings& pcg) {
    const BqpProblem& p = *p_;
    const std::size_t n = p.n();
    const double rho1 = state.rho[0], rho2 = state.rho[1];
    const double rho3 = state.rho[2], rho4 = state.rho[3];
    const bool l1_active = l1_c_ != nullptr && !state.z0.empty();
    const double rho0 = l1_active ? state.rho0 : 0.0;

    // rhs = rho1 z1 + rho2 z2 + rho3 C1^T d1 + rho4 C2^T (d2 - z3)
    //       - b - y1 - y2 - C1^T y3 - C2^T y4   [+ C^T (rho0 z0 - y0)]
    for (std::size_t i = 0; i < n; ++i)
        rhs_[i] = rho1 * state.z1[i] + rho2 * state.z2[i] - p.b[i] - state.y1[i] - state.y2[i];
    if (p.has_eq()) {
        t_m1_.resize(p.m1());
        for (std::size_t i = 0; i < p.m1(); ++i) t_m1_[i] = rho3 * p.d1[i] - state.y3[i];
        spmv_transpose_add(p.C1, 1.0, t_m1_, rhs_);
    }
    if (p.has_ineq()) {
        t_m2_.resize(p.m2());
        for (std::size_t i = 0; i < p.m2(); ++i)
            t_m2_[i] = rho4 * (p.d2[i] - state.z3[i]) - state.y4[i];
        spmv_transpose_add(p.C2, 1.0, t_m2_, rhs_);
    }
    if (l1_active) {
        t_m0_.resize(l1_c_->n_rows());
        for (std::size_t i = 0; i < t_m0_.size(); ++i)
            t_m0_[i] = rho0 * state.z0[i] - state.y0[i];
        spmv_transpose_add(*l1_c_, 1.0, t_m0_, rhs_);
    }

    const double ridge = rho1 + rho2;
    for (std::size_t i = 0; i < n; ++i) {
        double d = 2.0 * diag_a_[i] + ridge;
        if (p.has_eq()) d += rho3 * c1_colsq_[i];
        if (p.has_ineq()) d += rho4 * c2_colsq_[i];
        if (l1_active) d += rho0 * c0_colsq_[i];
        diag_[i] = d;
    }

    auto op = [&](const Vec& v, Vec& out) {
        p.A.apply(v, t_n_);
        out.resize(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = 2.0 * t_n_[i] + ridge * v[i];
        if (p.has_eq()) {
            spmv(p.C1, v, t_m1_);
            spmv_transpose_add(p.C1, rho3, t_m1_, out);
        }
        if (p.has_ineq()) {
            spmv(p.C2, v, t_m2_);
            spmv_transpose_add(p.C2, rho4, t_m2_, out);
        }
        if (l1_active) {
            spmv(*l1_c_, v, t_m0_);
            spmv_transpose_add(*l1_c_, rho0, t_m0_, out);
        }
    };

    PcgResult res = pcg_solve(op, rhs_, state.x, pcg, &diag_);
    if (!res.converged) ++non_converged_;
    state.x = std::move(res.x);
    return res.iterations;
}

std::size_t bqp_x_update(const BqpProblem& p, AdmmState& state, const PcgSettings& pcg) {
    BqpXUpdater updater(p);
    return updater.update(state, pcg);
}

void bqp_slack_dual_update(const BqpProblem& p, AdmmState& state, double gamma) {
    const double rho3 = state.rho[2], rho4 = state.rho[3];
    Vec c2x;
    if (p.has_ineq()) {
        spmv(p.C2, state.x, c2x);
        for (std::size_t i = 0; i < p.m2(); ++i)
            state.z3[i] = std::max(p.d2[i] - c2x[i] - state.y4[i] / rho4, 0.0);
    }
    if (p.has_eq()) {
        Vec c1x = spmv(p.C1, state.x);
        for (std::size_t i = 0; i < p.m1(); ++i)
            state.y3[i] += gamma * rho3 * (c1x[i] - p.d1[i]);
    }
    if (p.has_ineq()) {
        for (std::size_t i = 0; i < p.m2(); ++i)
            state.y4[i] += gamma * rho4 * (c2x[i] + state.z3[i] - p.d2[i]);
    }
}

AdmmState make_initial_state(const BqpProblem& p, const Vec& x0) {
    if (x0.size() != p.n())
        throw std::invalid_argument("initial x0 length " + std::to_string(x0.size()) +
                                    " != n " + std::to_string(p.n()));
    AdmmState s;
    s.x = x0;
    s.z1 = project_box(x0);
    s.z2 = project_sphere(x0);
    s.y1 = zeros(p.n());
    s.y2 = zeros(p.n());
    if (p.has_ineq()) {
        Vec gap = spmv(p.C2, x0);
        for (std::size_t i = 0; i < gap.size(); ++i) gap[i] = p.d2[i] - gap[i];
        s.z3 = project_nonneg(gap);
        s.y4 = zeros(p.m2());
    }
    if (p.has_eq()) s.y3 = zeros(p.m1());
    return s;
}

namespace {

constexpr double kRoundedFeasibilityTol = 1e-6;

SolveResult run_bqp_admm(const BqpProblem& p, const AdmmParams& params, const Vec& x0,
                         bool sphere, Rounding rounding) {
    p.validate();
    AdmmState init = make_initial_state(p, x0);
    BqpXUpdater updater(p);

    AdmmCallbacks cb;
    cb.sphere_enabled = sphere;
    cb.rounding = rounding;
    cb.x_update = [&](AdmmState& s) { return updater.update(s, params.pcg); };
    cb.extra_update = [&](AdmmState& s) { bqp_slack_dual_update(p, s, params.gamma); };
    cb.objective = [&](const Vec& x) { return bqp_objective(p, x); };
    cb.feasibility = [&](const Vec& x) { return feasibility_residuals(p, x); };

    SolveResult r = admm_run(cb, params, std::move(init));

    if (updater.non_converged_solves() > 0) {
        if (!r.message.empty()) r.message += "; ";
        r.message += std::to_string(updater.non_converged_solves()) +
                     " inner PCG solve(s) stopped at the iteration cap";
    }
    if (r.status == SolveStatus::converged &&
        std::max(r.res_eq, r.res_ineq) > kRoundedFeasibilityTol) {
        r.status = SolveStatus::rounded_infeasible;
        r.converged = false;
        if (!r.message.empty()) r.message += "; ";
        r.message += "rounded solution violates constraints (res_eq=" + std::to_string(r.res_eq) +
                     ", res_ineq=" + std::to_string(r.res_ineq) + ")";
    }
    return r;
}

}  // namespace

SolveResult solve_bqp(const BqpProblem& p, const AdmmParams& params, const Vec& x0) {
    return run_bqp_admm(p, params, x0, /*sphere=*/true, Rounding::nearest_within_tol);
}

SolveResult solve_lp_relaxation(const BqpProblem& p, const AdmmParams& params, const Vec& x0) {
    return run_bqp_admm(p, params, x0, /*sphere=*/false, Rounding::threshold_half);
}

}  // namespace lpbox
