#ifndef LPBOX_CORE_BQP_HPP
#define LPBOX_CORE_BQP_HPP

#include "core/admm.hpp"
#include "core/sparse.hpp"

namespace lpbox {

/// Quadratic coefficient matrix, stored as I_kron_blocks ⊗ block so that the
/// repeated block structure of the clustering and labeling reductions is never
/// materialized. kron_blocks == 1 is a plain sparse matrix.
struct QuadraticTerm {
    SparseMatrix block;
    std::size_t kron_blocks = 1;

    std::size_t dimension() const { return kron_blocks * block.n_rows(); }
    void apply(const Vec& v, Vec& out) const;
    Vec apply(const Vec& v) const;
    Vec diagonal() const;  // diagonal of the full matrix (block diag tiled)
};

/// min x^T A x + b^T x  s.t.  C1 x = d1, C2 x <= d2, x binary.
/// psd_shift records the alpha already folded into (A, b) by make_psd.
struct BqpProblem {
    QuadraticTerm A;
    Vec b;
    SparseMatrix C1;
    Vec d1;
    SparseMatrix C2;
    Vec d2;
    double psd_shift = 0.0;

    std::size_t n() const { return b.size(); }
    std::size_t m1() const { return C1.n_rows(); }
    std::size_t m2() const { return C2.n_rows(); }
    bool has_eq() const { return C1.n_rows() > 0; }
    bool has_ineq() const { return C2.n_rows() > 0; }

    /// Checks dimensional consistency and symmetry of A (to 1e-12).
    void validate() const;
};

/// A = M + alpha*I, b = c - alpha*1. Exact on binary points:
/// x^T A x + b^T x == x^T M x + c^T x whenever x is 0/1.
std::pair<SparseMatrix, Vec> make_psd(const SparseMatrix& m, const Vec& c, double alpha);

/// Estimate of the smallest shift making M + alpha*I PSD: -lambda_min of M is
/// estimated by power iteration on -M (with a second, shifted pass so the
/// estimate is not fooled when the largest positive eigenvalue dominates),
/// then inflated by 10%. Returns 0 for matrices that are already PSD.
double psd_shift_bound(const SparseMatrix& m, std::size_t power_iterations = 100);

double bqp_objective(const BqpProblem& p, const Vec& x);

/// (||C1 x - d1||_2, ||max(C2 x - d2, 0)||_2)
std::pair<double, double> feasibility_residuals(const BqpProblem& p, const Vec& x);

/// Solves the x-subproblem linear system
///   (2A + (rho1+rho2) I + rho3 C1^T C1 + rho4 C2^T C2 [+ rho0 C^T C]) x = rhs
/// matrix-free with PCG, warm-started from state.x. The optional l1 coupling
/// matrix adds the rho0 C^T C term and the rho0 C^T z0 - C^T y0 right-hand
/// side contribution. Reusable across iterations (owns the work vectors).
class BqpXUpdater {
  public:
    explicit BqpXUpdater(const BqpProblem& p, const SparseMatrix* l1_coupling = nullptr);

    /// Updates state.x; returns PCG iterations. Non-converged PCG keeps the
    /// best iterate and is counted in non_converged_solves().
    std::size_t update(AdmmState& state, const PcgSettings& pcg);

    std::size_t non_converged_solves() const { return non_converged_; }

  private:
    const BqpProblem* p_;
    const SparseMatrix* l1_c_;
    Vec diag_a_;      // diagonal of A
    Vec c1_colsq_;    // diag(C1^T C1)
    Vec c2_colsq_;    // diag(C2^T C2)
    Vec c0_colsq_;    // diag(C^T C)
    Vec rhs_, diag_, t_n_, t_m1_, t_m2_, t_m0_;
    std::size_t non_converged_ = 0;
};

/// One-shot form of the x-update (Eq-9-style system).
std::size_t bqp_x_update(const BqpProblem& p, AdmmState& state, const PcgSettings& pcg);

/// z3 <- max(d2 - C2 x - y4/rho4, 0); y3 += gamma*rho3*(C1 x - d1);
/// y4 += gamma*rho4*(C2 x + z3 - d2), in that order.
void bqp_slack_dual_update(const BqpProblem& p, AdmmState& state, double gamma);

/// Fresh solver state: z1/z2 are the projections of x0, z3 absorbs the initial
/// inequality gap, all duals zero.
AdmmState make_initial_state(const BqpProblem& p, const Vec& x0);

SolveResult solve_bqp(const BqpProblem& p, const AdmmParams& params, const Vec& x0);

/// Box-relaxation baseline: the same machinery with the sphere branch off,
/// rounded at 0.5 (ties up). Requires A PSD so the relaxation is convex.
SolveResult solve_lp_relaxation(const BqpProblem& p, const AdmmParams& params, const Vec& x0);

}  // namespace lpbox

#endif
