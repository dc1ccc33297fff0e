#ifndef LPBOX_CORE_L1_HPP
#define LPBOX_CORE_L1_HPP

#include "core/bqp.hpp"

namespace lpbox {

/// min f(x) + lambda ||C x||_1 over binary x in the base problem's feasible
/// set, handled by splitting C x = z0 with penalty rho0.
struct L1Problem {
    BqpProblem base;
    SparseMatrix c;      // m0 x n coupling (difference/filter) matrix
    double lambda = 0.0;
    double rho0 = 1e-3;  // initial penalty on C x = z0; follows the rho schedule

    void validate() const;
};

/// out_i = sign(v_i) * max(|v_i| - kappa, 0)
Vec soft_threshold(const Vec& v, double kappa);

double l1_objective(const L1Problem& p, const Vec& x);

/// x-subproblem with the extra rho0 C^T C term folded into the BQP system.
std::size_t l1_x_update(const L1Problem& p, AdmmState& state, const PcgSettings& pcg);

/// z0 <- S_{lambda/rho0}(C x + y0/rho0); y0 += gamma*rho0*(C x - z0).
void l1_z0_y0_update(const L1Problem& p, AdmmState& state, double gamma);

/// Runs the BQP machinery with the additional (z0, y0) branch. With lambda = 0
/// or an empty C the branch is inert and the solve reduces to solve_bqp
/// iteration for iteration.
SolveResult solve_l1(const L1Problem& p, const AdmmParams& params, const Vec& x0);

}  // namespace lpbox

#endif
