/* C API for the adiasweep shared library.
 *
 * All entry points return an adia_status; on failure adia_last_error()
 * holds a thread-local diagnostic for the most recent failing call.
 * Handles are opaque and must be released with adia_model_free().
 */
#ifndef ADIASWEEP_H
#define ADIASWEEP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    ADIA_OK = 0,
    ADIA_ERR_ARGUMENT = 1,  /* invalid parameters or handles */
    ADIA_ERR_NUMERICAL = 2, /* solver failure, degeneracy, non-convergence */
    ADIA_ERR_IO = 3         /* unwritable or unreadable path */
} adia_status;

typedef enum {
    ADIA_SCHED_LINEAR_LZ = 0,
    ADIA_SCHED_QUADRATIC_LZ = 1,
    ADIA_SCHED_LINEAR = 2,
    ADIA_SCHED_QUADRATIC = 3,
    ADIA_SCHED_EXP_LIKE = 4
} adia_schedule_kind;

typedef struct adia_model adia_model;

/* Message describing the most recent failure on this thread; never NULL. */
const char* adia_last_error(void);

/* Model constructors return NULL on invalid parameters. */
adia_model* adia_model_lz(double omega0, double omega_x);
adia_model* adia_model_aqc1(double omega_x, double omega_z);
adia_model* adia_model_factor21(double g);
void adia_model_free(adia_model* model);

/* Minimal-gap position and value of the model's interpolation. */
adia_status adia_minimal_gap(const adia_model* model, double* s_c, double* gap_min);

/* Gap curve over `points` uniform s values; CSV columns s,e0,e1,gap plus a
 * trailing "# s_c=... gap_min=..." summary line. */
adia_status adia_gap_scan_csv(const adia_model* model, int points, const char* path);

/* Final ground-state fidelity of one evolution. alpha is only read for
 * ADIA_SCHED_EXP_LIKE; pass n_steps <= 0 for the default (40000). */
adia_status adia_evolve_fidelity(const adia_model* model, adia_schedule_kind kind, double alpha,
                                 double T, int n_steps, double* fidelity_out);

/* Like adia_evolve_fidelity but also writes a trajectory CSV with columns
 * t,s_or_wz,fidelity_to_instantaneous_ground,norm sampled every
 * record_every steps (0 = final state only). */
adia_status adia_evolve_csv(const adia_model* model, adia_schedule_kind kind, double alpha,
                            double T, int n_steps, int record_every, const char* path,
                            double* fidelity_out);

/* Fidelity-vs-T scan; CSV columns model,schedule,T,alpha,fidelity ordered by
 * (schedule list position, T). With optimize != 0, exp-like rows carry the
 * per-T optimized alpha; alpha_grid may be NULL for the default grid. */
adia_status adia_scan_csv(const adia_model* model, const adia_schedule_kind* kinds, int n_kinds,
                          const double* T_values, int n_T, double fixed_alpha, int optimize,
                          const double* alpha_grid, int n_alpha, int n_steps, const char* path);

/* Best exponential-like alpha for one T (grid search + golden-section). */
adia_status adia_optimize_alpha(const adia_model* model, double T, const double* alpha_grid,
                                int n_alpha, int n_steps, double* alpha_best, double* f_best);

/* Per-T alpha optimization; CSV columns T,alpha_best,fidelity_best. */
adia_status adia_optimize_alpha_csv(const adia_model* model, const double* T_values, int n_T,
                                    const double* alpha_grid, int n_alpha, int n_steps,
                                    const char* path);

#ifdef __cplusplus
}
#endif

#endif /* ADIASWEEP_H */
