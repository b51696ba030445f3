/* Public C interface of the focp solver library.
 *
 * The library solves scalar linear-quadratic optimal control problems with
 * fractional-order dynamics (order in (0, 1]) by a midpoint
 * Grunwald-Letnikov discretization of the optimality system. Objects are
 * reached through opaque handles; every fallible call returns a
 * focp_status, with FOCP_OK (0) on success and a thread-local message
 * available from focp_last_error() on failure.
 */
#ifndef FOCP_H
#define FOCP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum focp_status {
    FOCP_OK = 0,
    FOCP_ERROR_INVALID_ARGUMENT, /* null pointer, unknown name, bad enum value */
    FOCP_ERROR_DOMAIN,           /* argument outside its admissible range */
    FOCP_ERROR_POSITIVITY,       /* q < 0 or r <= 0 at a sampled point */
    FOCP_ERROR_EVALUATION,       /* coefficient evaluated non-finite */
    FOCP_ERROR_SINGULAR_SYSTEM,  /* elimination pivot below threshold */
    FOCP_ERROR_NO_CONVERGENCE,   /* sweep iteration cap exhausted */
    FOCP_ERROR_PARSE,            /* problem file syntax error */
    FOCP_ERROR_IO,               /* file could not be read or written */
    FOCP_ERROR_INTERNAL
} focp_status;

typedef enum focp_method { FOCP_METHOD_DIRECT = 0, FOCP_METHOD_SWEEP = 1 } focp_method;

typedef enum focp_format { FOCP_FORMAT_CSV = 0, FOCP_FORMAT_JSON = 1 } focp_format;

typedef struct focp_problem focp_problem;
typedef struct focp_trajectory focp_trajectory;
typedef struct focp_study focp_study;

typedef struct focp_solve_options {
    focp_method method;
    double sweep_tolerance;       /* max-norm change between sweeps, default 1e-10 */
    long sweep_max_iterations;    /* default 10000 */
    double pivot_threshold;       /* default 1e-13 */
    int compat_costate_average;   /* nonzero selects the lagged costate row form */
} focp_solve_options;

/* Fills the defaults listed above (direct method, compat off). */
void focp_solve_options_init(focp_solve_options* options);

const char* focp_status_name(focp_status status);

/* Message for the most recent failure on this thread; empty string if none. */
const char* focp_last_error(void);

const char* focp_version(void);

/* --- problems ---------------------------------------------------------- */

/* name is "tip" (time-invariant benchmark: q=r=b=1, a=-1, x0=1) or "tvp"
 * (time-varying benchmark: q=r=b=1, a(t)=t, x0=1), both on [0, 1]. */
focp_status focp_problem_builtin(const char* name, focp_problem** out);

/* Key-value problem file; see the library documentation for the format. */
focp_status focp_problem_load(const char* path, focp_problem** out);

/* Polynomial coefficients, lowest degree first; a single coefficient is a
 * constant. Pass horizon <= 0 to get the default horizon of 1. */
focp_status focp_problem_poly(const double* q, size_t q_len,
                              const double* r, size_t r_len,
                              const double* a, size_t a_len,
                              const double* b, size_t b_len,
                              double x0, double horizon, focp_problem** out);

const char* focp_problem_name(const focp_problem* problem);
void focp_problem_free(focp_problem* problem);

/* --- weights ----------------------------------------------------------- */

/* Writes the first count Grunwald-Letnikov weights w_0 .. w_{count-1} for
 * the given order into out. */
focp_status focp_gl_weights(double alpha, size_t count, double* out);

/* --- solving ----------------------------------------------------------- */

/* Solves at n divisions with the given order. options may be NULL for the
 * defaults. */
focp_status focp_solve(const focp_problem* problem, double alpha, long n,
                       const focp_solve_options* options, focp_trajectory** out);

/* Direct solve on a fine grid, tagged as reference; n_fine must be a power
 * of two >= 512. */
focp_status focp_reference_solution(const focp_problem* problem, double alpha, long n_fine,
                                    focp_trajectory** out);

/* Number of grid nodes (n + 1). */
size_t focp_trajectory_points(const focp_trajectory* trajectory);

/* Borrowed arrays of focp_trajectory_points() values, valid until free. */
const double* focp_trajectory_times(const focp_trajectory* trajectory);
const double* focp_trajectory_state(const focp_trajectory* trajectory);
const double* focp_trajectory_costate(const focp_trajectory* trajectory);
const double* focp_trajectory_control(const focp_trajectory* trajectory);

/* Max-norm residual of the discrete system at the returned solution. */
double focp_trajectory_residual(const focp_trajectory* trajectory);
const char* focp_trajectory_method(const focp_trajectory* trajectory);

/* CSV columns t,x,lambda,u or JSON {meta, times, state, costate, control};
 * byte-deterministic for identical inputs. */
focp_status focp_trajectory_write(const focp_trajectory* trajectory, const char* path,
                                  focp_format format);
void focp_trajectory_free(focp_trajectory* trajectory);

/* --- studies ----------------------------------------------------------- */

/* Solves every (alpha, n) pair; n_values must be strictly increasing. */
focp_status focp_study_convergence(const focp_problem* problem,
                                   const double* alphas, size_t alpha_count,
                                   const long* n_values, size_t n_count,
                                   const focp_solve_options* options, focp_study** out);

/* Solves at fixed n for each alpha. */
focp_status focp_study_alpha_sweep(const focp_problem* problem,
                                   const double* alphas, size_t alpha_count, long n,
                                   const focp_solve_options* options, focp_study** out);

size_t focp_study_rows(const focp_study* study);

/* Reads row index (in (alpha, n) run order). Optional outputs may be NULL.
 * has_delta / has_oracle_error receive 0 or 1; when 0 the corresponding
 * value is left untouched. */
focp_status focp_study_row(const focp_study* study, size_t index,
                           double* alpha, long* n, double* x_end, double* u_start,
                           double* delta_vs_half_n, int* has_delta,
                           double* oracle_sup_error, int* has_oracle_error);

/* Worst discrete-system residual over all solves run by the study. */
double focp_study_max_residual(const focp_study* study);

/* CSV columns problem,alpha,n,x_end,u_start,delta_vs_half_n,oracle_sup_error
 * sorted by (alpha, n), or JSON {meta, rows}. */
focp_status focp_study_write(const focp_study* study, const char* path, focp_format format);
void focp_study_free(focp_study* study);

/* --- closed form for the time-invariant benchmark at order 1 ----------- */

double focp_tip_beta(void);
double focp_analytic_tip_state(double t);
double focp_analytic_tip_control(double t);

#ifdef __cplusplus
}
#endif

#endif /* FOCP_H */
