#include "core/pcg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lpbox {

namespace {

void check_finite(const Vec& v, const char* where) {
    if (!all_finite(v))
        throw std::runtime_error(std::string("pcg_solve: non-finite value in ") + where +
                                 " (operator indefinite or ill-posed?)");
}

}  // namespace

PcgResult pcg_solve(const LinearOperator& apply, const Vec& b, const Vec& x0,
                    const PcgSettings& settings, const Vec* jacobi_diag) {
    const std::size_t n = b.size();
    if (x0.size() != n) throw std::invalid_argument("pcg_solve: x0 length does not match b");
    if (settings.rel_tolerance <= 0.0)
        throw std::invalid_argument("pcg_solve: rel_tolerance must be positive");
    const bool use_jacobi = settings.preconditioner == Preconditioner::jacobi;
    if (use_jacobi && (jacobi_diag == nullptr || jacobi_diag->size() != n))
        throw std::invalid_argument("pcg_solve: jacobi preconditioner needs the operator diagonal");

    std::size_t max_iters = settings.max_iterations ? settings.max_iterations : 10 * n;
    if (max_iters == 0) max_iters = 1;

    PcgResult result;
    result.x = x0;

    const double b_norm = norm2(b);
    if (b_norm == 0.0) {
        // SPD operator: zero right-hand side has the unique solution x = 0.
        result.x.assign(n, 0.0);
        result.converged = true;
        return result;
    }
    const double threshold = settings.rel_tolerance * b_norm;

    Vec r(n), z(n), p(n), ap(n);
    apply(result.x, ap);
    check_finite(ap, "A*x0");
    for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - ap[i];

    auto precondition = [&](const Vec& rin, Vec& zout) {
        if (use_jacobi) {
            for (std::size_t i = 0; i < n; ++i) {
                const double d = (*jacobi_diag)[i];
                zout[i] = d != 0.0 ? rin[i] / d : rin[i];
            }
        } else {
            zout = rin;
        }
    };

    double r_norm = norm2(r);
    result.residual = r_norm;
    Vec best_x = result.x;
    double best_residual = r_norm;

    if (r_norm <= threshold) {
        result.converged = true;
        return result;
    }

    precondition(r, z);
    p = z;
    double rz = dot(r, z);

    for (std::size_t k = 0; k < max_iters; ++k) {
        apply(p, ap);
        const double pap = dot(p, ap);
        if (!std::isfinite(pap))
            throw std::runtime_error("pcg_solve: non-finite curvature at iteration " +
                                     std::to_string(k));
        if (pap <= 0.0)
            throw std::runtime_error("pcg_solve: non-positive curvature p^T A p = " +
                                     std::to_string(pap) + " (operator not positive definite)");
        const double alpha = rz / pap;
        axpy(alpha, p, result.x);
        axpy(-alpha, ap, r);
        check_finite(r, "residual");
        result.iterations = k + 1;

        r_norm = norm2(r);
        if (r_norm < best_residual) {
            best_residual = r_norm;
            best_x = result.x;
        }
        if (r_norm <= threshold) {
            // recurrence can drift; confirm against the true residual
            apply(result.x, ap);
            for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - ap[i];
            r_norm = norm2(r);
            if (r_norm <= threshold) {
                result.residual = r_norm;
                result.converged = true;
                return result;
            }
        }

        precondition(r, z);
        const double rz_next = dot(r, z);
        const double beta = rz_next / rz;
        for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
        rz = rz_next;
    }

    result.x = best_x;
    result.residual = best_residual;
    result.converged = false;
    return result;
}

}  // namespace lpbox
