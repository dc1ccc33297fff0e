/*
 * lpbox — binary integer programming by ADMM over the box/sphere split.
 *
 * C interface to the solver core: opaque handles, integer status codes, and
 * plain-struct parameters. All functions returning lpbox_status leave a
 * human-readable message retrievable via lpbox_last_error() on failure.
 * Handles are freed with the matching *_free function; passing NULL to a
 * *_free function is a no-op.
 */

#ifndef LPBOX_H
#define LPBOX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LPBOX_API __declspec(dllexport)
#else
#define LPBOX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lpbox_status {
    LPBOX_OK = 0,
    LPBOX_ERR_INVALID_ARG = 1,
    LPBOX_ERR_IO = 2,
    LPBOX_ERR_PARSE = 3,
    LPBOX_ERR_DIMENSION = 4,
    LPBOX_ERR_UNSUPPORTED = 5,
    LPBOX_ERR_LIMIT = 6,      /* enumeration/size limit exceeded */
    LPBOX_ERR_NUMERICAL = 7,
    LPBOX_ERR_INTERNAL = 8
} lpbox_status;

typedef enum lpbox_solve_status {
    LPBOX_SOLVE_CONVERGED = 0,
    LPBOX_SOLVE_MAX_ITERATIONS = 1,
    LPBOX_SOLVE_NOT_BINARY = 2,
    LPBOX_SOLVE_ROUNDED_INFEASIBLE = 3,
    LPBOX_SOLVE_NUMERICAL_ERROR = 4
} lpbox_solve_status;

typedef enum lpbox_problem_kind {
    LPBOX_PROBLEM_BQP = 0,
    LPBOX_PROBLEM_L1 = 1,
    LPBOX_PROBLEM_MRF = 2,
    LPBOX_PROBLEM_MATCHING = 3,
    LPBOX_PROBLEM_CLUSTERING = 4
} lpbox_problem_kind;

/* Solver tunables. Obtain defaults from lpbox_params_default before
 * overriding fields. y2_freeze_at < 0 disables the freeze entirely. */
typedef struct lpbox_params {
    double rho1, rho2, rho3, rho4; /* initial penalties */
    double mu;                     /* per-iteration penalty growth, >= 1 */
    double rho_max;                /* finite penalty ceiling */
    double gamma;                  /* dual step scale in (0, 1] */
    double stop_tol;               /* residual threshold, scaled by sqrt(n) */
    int64_t max_iterations;
    int64_t y2_freeze_at;          /* iteration from which y2 stops updating */
    double binarize_tol;
    double pcg_rel_tol;
    int64_t pcg_max_iterations;    /* 0: 10*n */
} lpbox_params;

typedef struct lpbox_problem lpbox_problem;
typedef struct lpbox_result lpbox_result;
typedef struct lpbox_oracle_result lpbox_oracle_result;

LPBOX_API const char* lpbox_version(void);

/* Message for the most recent failure on this thread. */
LPBOX_API const char* lpbox_last_error(void);

LPBOX_API void lpbox_params_default(lpbox_params* params);

/* --- problems ----------------------------------------------------------- */

LPBOX_API lpbox_status lpbox_problem_load_bqp(const char* dir, lpbox_problem** out);
LPBOX_API lpbox_status lpbox_problem_load_l1(const char* dir, lpbox_problem** out);
LPBOX_API lpbox_status lpbox_problem_load_mrf(const char* dir, lpbox_problem** out);
LPBOX_API lpbox_status lpbox_problem_load_matching(const char* dir, lpbox_problem** out);
LPBOX_API lpbox_status lpbox_problem_load_clustering(const char* dir, lpbox_problem** out);

/* Seeded synthetic instances (the bench suites). */
LPBOX_API lpbox_status lpbox_problem_gen_bqp(uint64_t seed, int64_t n, int64_t m1, int64_t m2,
                                             lpbox_problem** out);
LPBOX_API lpbox_status lpbox_problem_gen_grid_mrf(uint64_t seed, int64_t rows, int64_t cols,
                                                  int64_t k, lpbox_problem** out);
LPBOX_API lpbox_status lpbox_problem_gen_matching(uint64_t seed, int64_t n1, int64_t n2,
                                                  lpbox_problem** out);
LPBOX_API lpbox_status lpbox_problem_gen_clustering(uint64_t seed, int64_t n, int64_t k,
                                                    lpbox_problem** out);

LPBOX_API void lpbox_problem_free(lpbox_problem* problem);

LPBOX_API lpbox_problem_kind lpbox_problem_get_kind(const lpbox_problem* problem);
LPBOX_API int64_t lpbox_problem_dimension(const lpbox_problem* problem);

/* Application-specific starting point (random labeling / spectral / k-means /
 * jittered half). x0 must hold lpbox_problem_dimension entries. When the
 * start is an interpretable assignment its reported objective is written to
 * init_objective (NaN otherwise); pass NULL to ignore. */
LPBOX_API lpbox_status lpbox_problem_default_init(const lpbox_problem* problem, uint64_t seed,
                                                  double* x0, double* init_objective);

/* --- solving ------------------------------------------------------------ */

/* x0 may be NULL (uses lpbox_problem_default_init with seed 0). Solver
 * failure classes are reported through the result status, not the return
 * code. */
LPBOX_API lpbox_status lpbox_solve(const lpbox_problem* problem, const lpbox_params* params,
                                   const double* x0, size_t x0_len, lpbox_result** out);

/* Box-relaxation baseline (sphere branch off, rounding at 0.5). */
LPBOX_API lpbox_status lpbox_solve_lp(const lpbox_problem* problem, const lpbox_params* params,
                                      const double* x0, size_t x0_len, lpbox_result** out);

LPBOX_API void lpbox_result_free(lpbox_result* result);

LPBOX_API lpbox_solve_status lpbox_result_status(const lpbox_result* result);
LPBOX_API int lpbox_result_converged(const lpbox_result* result);
/* Objective in the application's original sense (e.g. x^T M x for matching). */
LPBOX_API double lpbox_result_objective(const lpbox_result* result);
LPBOX_API double lpbox_result_binariness(const lpbox_result* result);
LPBOX_API double lpbox_result_residual_eq(const lpbox_result* result);
LPBOX_API double lpbox_result_residual_ineq(const lpbox_result* result);
LPBOX_API int64_t lpbox_result_iterations(const lpbox_result* result);
LPBOX_API const char* lpbox_result_message(const lpbox_result* result);

LPBOX_API int64_t lpbox_result_solution_size(const lpbox_result* result);
LPBOX_API lpbox_status lpbox_result_solution(const lpbox_result* result, double* buf, size_t len);

/* Decoded labels: MRF/clustering -> one 0-based label per item; matching ->
 * matched target per left node or -1; BQP/L1 -> the binary entries. */
LPBOX_API int64_t lpbox_problem_decode_size(const lpbox_problem* problem);
LPBOX_API lpbox_status lpbox_result_decode(const lpbox_problem* problem,
                                           const lpbox_result* result, int32_t* buf, size_t len);

/* Per-iteration trace. Row layout: k, objective, res_z1, res_z2, res_eq,
 * res_ineq, binariness, pcg_iters. */
LPBOX_API int64_t lpbox_result_trace_size(const lpbox_result* result);
LPBOX_API lpbox_status lpbox_result_trace_row(const lpbox_result* result, int64_t row,
                                              double out[8]);
LPBOX_API lpbox_status lpbox_result_write_trace_csv(const lpbox_result* result,
                                                    const char* path);

/* --- brute-force oracle -------------------------------------------------- */

/* limit == 0 uses the per-kind default. An empty feasible set is reported
 * through the result (feasible_count == 0), not as an error. */
LPBOX_API lpbox_status lpbox_oracle(const lpbox_problem* problem, int64_t limit,
                                    lpbox_oracle_result** out);
LPBOX_API void lpbox_oracle_result_free(lpbox_oracle_result* result);

LPBOX_API double lpbox_oracle_best_objective(const lpbox_oracle_result* result);
LPBOX_API int64_t lpbox_oracle_feasible_count(const lpbox_oracle_result* result);
LPBOX_API int64_t lpbox_oracle_optima_count(const lpbox_oracle_result* result);
LPBOX_API lpbox_status lpbox_oracle_best_solution(const lpbox_oracle_result* result, double* buf,
                                                  size_t len);

#ifdef __cplusplus
}
#endif

#endif /* LPBOX_H */
