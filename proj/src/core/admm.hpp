#ifndef LPBOX_CORE_ADMM_HPP
#define LPBOX_CORE_ADMM_HPP

#include <array>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "core/pcg.hpp"
#include "core/vecops.hpp"

namespace lpbox {

struct AdmmParams {
    // initial penalties on x=z1, x=z2, C1 x = d1, C2 x + z3 = d2
    double rho1 = 1e-3;
    double rho2 = 1e-3;
    double rho3 = 1e-3;
    double rho4 = 1e-3;
    double mu = 1.03;       // geometric penalty growth per iteration
    double rho_max = 1e6;   // finite ceiling so the penalty sequence converges
    double gamma = 0.9;     // dual ascent step scale, in (0, 1]
    double stop_tol = 1e-4; // converged when max primal residual <= stop_tol * sqrt(n)
    std::size_t max_iterations = 2000;
    // iteration index from which y2 stops updating; nullopt = max_iterations/2
    std::optional<std::size_t> y2_freeze_at;
    double binarize_tol = 1e-3;
    PcgSettings pcg;

    void validate() const;  // throws std::invalid_argument on a bad field
};

/// Full iterate of the split problem. z0/y0/rho0 are the optional l1-extension
/// slots and stay empty for plain BQP runs.
struct AdmmState {
    Vec x, z1, z2, z3;
    Vec y1, y2, y3, y4;
    std::array<double, 4> rho{};
    std::size_t k = 0;

    Vec z0, y0;
    double rho0 = 0.0;
};

struct IterationRecord {
    std::size_t k = 0;
    double objective = 0.0;
    double res_z1 = 0.0;    // ||x - z1||_2
    double res_z2 = 0.0;    // ||x - z2||_2
    double res_eq = 0.0;    // ||C1 x - d1||_2
    double res_ineq = 0.0;  // ||max(C2 x - d2, 0)||_2
    double binariness = 0.0;
    std::size_t pcg_iters = 0;
};

enum class SolveStatus {
    converged,
    max_iterations,
    not_binary,          // residuals converged but an entry is far from {0,1}
    rounded_infeasible,  // rounded solution violates C1/C2 beyond tolerance
    numerical_error,
};

const char* to_string(SolveStatus s);

struct SolveResult {
    Vec x;             // binary solution when available, otherwise the final iterate
    Vec x_continuous;  // final continuous iterate
    double objective = 0.0;
    bool converged = false;
    SolveStatus status = SolveStatus::max_iterations;
    double res_eq = 0.0;
    double res_ineq = 0.0;
    double binariness = 0.0;
    std::size_t iterations = 0;
    std::string message;
    std::vector<IterationRecord> trace;
};

/// How the final continuous iterate is turned into a binary vector.
enum class Rounding {
    nearest_within_tol,  // round to {0,1}; fails if any entry is off by > binarize_tol
    threshold_half,      // x >= 0.5 -> 1 (LP-relaxation baseline)
};

struct AdmmCallbacks {
    // Solves the x-subproblem in place given current (z, y, rho); returns the
    // inner-solver iteration count for the trace.
    std::function<std::size_t(AdmmState&)> x_update;
    // Optional constraint-block update (z3 -> y3 -> y4, and z0 -> y0 for l1),
    // run after the z1/z2 projections and before the y1/y2 ascent.
    std::function<void(AdmmState&)> extra_update;
    std::function<double(const Vec&)> objective;
    // (||C1 x - d1||, ||max(C2 x - d2, 0)||) of the current iterate
    std::function<std::pair<double, double>(const Vec&)> feasibility;
    // Test/diagnostic hook, called after each completed iteration.
    std::function<void(const AdmmState&, const IterationRecord&)> on_iteration;
    bool sphere_enabled = true;  // disabled for the LP-relaxation baseline
    Rounding rounding = Rounding::nearest_within_tol;
};

/// y + gamma * rho * residual
Vec dual_ascent_step(const Vec& y, const Vec& residual, double gamma, double rho);

/// Rounds each component to the nearest of {0,1}; nullopt if any component is
/// farther than tol from both.
std::optional<Vec> binarize(const Vec& x, double tol);

/// The generic alternating loop: x-update, projections onto box and sphere,
/// constraint-block update, dual ascent, penalty growth, stopping test.
SolveResult admm_run(const AdmmCallbacks& callbacks, const AdmmParams& params, AdmmState state);

/// CSV with header k,objective,res_z1,res_z2,res_eq,res_ineq,binariness,pcg_iters
void write_trace_csv(std::ostream& out, const std::vector<IterationRecord>& trace);

}  // namespace lpbox

#endif
