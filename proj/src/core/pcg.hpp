#ifndef LPBOX_CORE_PCG_HPP
#define LPBOX_CORE_PCG_HPP

#include <cstddef>
#include <functional>

#include "core/vecops.hpp"

namespace lpbox {

enum class Preconditioner { none, jacobi };

struct PcgSettings {
    double rel_tolerance = 1e-8;
    std::size_t max_iterations = 0;  // 0: defaults to 10 * n at solve time
    Preconditioner preconditioner = Preconditioner::jacobi;
};

struct PcgResult {
    Vec x;
    std::size_t iterations = 0;
    double residual = 0.0;  // ||apply(x) - b||_2
    bool converged = false;
};

/// y = A x, evaluated matrix-free.
using LinearOperator = std::function<void(const Vec&, Vec&)>;

/// Conjugate gradient on a symmetric positive-definite operator. Stops when
/// ||apply(x) - b|| <= rel_tolerance * ||b||, or returns the best iterate with
/// converged=false once max_iterations is reached. jacobi_diag supplies the
/// operator diagonal when the jacobi preconditioner is selected.
///
/// Throws std::runtime_error if a non-finite value or a non-positive curvature
/// p^T A p shows up, which signals an indefinite or ill-posed operator.
PcgResult pcg_solve(const LinearOperator& apply, const Vec& b, const Vec& x0,
                    const PcgSettings& settings, const Vec* jacobi_diag = nullptr);

}  // namespace lpbox

#endif
