/* Copyright (c) 2026 The marle authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the marle toolkit: relativistic BGK (Marle) relaxation for
 * polyatomic gases.  Opaque handles own all heavy state; every function
 * returns a status code and writes results through out-parameters.  Handles
 * are destroyed with the matching *_destroy call.  Error messages for the
 * last failure on the calling thread are available via marle_last_error().
 */

#ifndef MARLE_H
#define MARLE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum marle_status {
  MARLE_OK = 0,
  MARLE_ERR_INVALID_ARGUMENT,
  MARLE_ERR_NONFINITE_INPUT,
  MARLE_ERR_NEGATIVE_INTERNAL_ENERGY,
  MARLE_ERR_INVALID_GRID_CONFIG,
  MARLE_ERR_GRID_MISMATCH,
  MARLE_ERR_NON_TIMELIKE_FLUX,
  MARLE_ERR_NEGATIVE_TIME_COMPONENT,
  MARLE_ERR_NONPOSITIVE_GAMMA,
  MARLE_ERR_RATIO_OUT_OF_RANGE,
  MARLE_ERR_BRACKET_FAILURE,
  MARLE_ERR_TOLERANCE_NOT_REACHED,
  MARLE_ERR_CFL_VIOLATION,
  MARLE_ERR_ALLOC,
  MARLE_ERR_INTERNAL
} marle_status;

/* Physical parameters: c, m, k_B, tau > 0 and sigma > -1. */
typedef struct marle_constants {
  double c;
  double m;
  double k_B;
  double tau;
  double sigma;
} marle_constants;

/* Phase-space discretization.  p_max <= 0 and s_max <= 0 select the built-in
 * cutoff rules p_max = (8/gamma_min + 8) mc and s_max = 40/gamma_min + 40. */
typedef struct marle_grid_config {
  int n_p;          /* momentum nodes per axis, even, >= 8 */
  double p_max;     /* momentum cutoff */
  int n_I;          /* internal-energy nodes, >= 4 */
  double s_max;     /* energy cutoff in units of mc^2 */
  double gamma_min; /* smallest gamma the run expects */
  double check_tol; /* build-time quadrature check tolerance (<=0: 1e-8) */
} marle_grid_config;

typedef struct marle_equilibrium_params {
  double n;
  double u[3];
  double gamma;
} marle_equilibrium_params;

typedef struct marle_radial_result {
  double gamma;
  double M;         /* may underflow to 0 for very large gamma */
  double Mtilde;
  double M1, M2, M3;
  double M1_scaled, M2_scaled, M3_scaled; /* times e^{+gamma}/(mc^2)^{sigma+1} */
  double log_scale; /* = -gamma */
  double ratio;     /* Mtilde/M, stable for any gamma */
} marle_radial_result;

typedef struct marle_moment_set {
  double V[4];
  double T[16]; /* row-major 4x4, symmetric */
  double h[4];
  double S;
} marle_moment_set;

typedef struct marle_diagnostics_record {
  double t;
  double N;
  double V[4];
  double T0[4];
  double h0;
  double entropy_production;
  double r_scalar;
  double r_V[4];
} marle_diagnostics_record;

typedef struct marle_grid marle_grid;
typedef struct marle_dist marle_dist;
typedef struct marle_slab marle_slab;

const char* marle_version(void);
const char* marle_status_name(marle_status s);
/* Message of the most recent error on this thread ("" if none). */
const char* marle_last_error(void);

/* ---- core ---------------------------------------------------------- */

marle_status marle_minkowski_dot(const double a[4], const double b[4],
                                 double* out);
marle_status marle_four_velocity(const marle_constants* k, const double u[3],
                                 double U[4]);
/* Boost taking U to (c,0,0,0); lambda/inv are row-major 4x4 (may be NULL). */
marle_status marle_boost_matrices(const marle_constants* k, const double U[4],
                                  double lambda[16], double inv[16]);
marle_status marle_state_density(double I, double sigma, double* out);

/* ---- phase grid and distributions ----------------------------------- */

marle_status marle_grid_create(const marle_constants* k,
                               const marle_grid_config* cfg, marle_grid** out);
void marle_grid_destroy(marle_grid* g);
size_t marle_grid_num_pnodes(const marle_grid* g);
size_t marle_grid_num_inodes(const marle_grid* g);
size_t marle_grid_size(const marle_grid* g);
double marle_grid_phi_check_error(const marle_grid* g);
/* Effective cutoffs after rule substitution. */
double marle_grid_p_max(const marle_grid* g);
double marle_grid_s_max(const marle_grid* g);

/* Borrowed node-geometry views, length num_pnodes (momentum) or num_inodes
 * (energy); valid while the grid lives. */
const double* marle_grid_px(const marle_grid* g);
const double* marle_grid_py(const marle_grid* g);
const double* marle_grid_pz(const marle_grid* g);
const double* marle_grid_p0(const marle_grid* g);
const double* marle_grid_I_nodes(const marle_grid* g);
const double* marle_grid_I_weights(const marle_grid* g);
double marle_grid_p_weight(const marle_grid* g);

marle_status marle_dist_create_zero(const marle_grid* g, marle_dist** out);
marle_status marle_dist_create_juttner(const marle_grid* g,
                                       const marle_equilibrium_params* p,
                                       marle_dist** out);
marle_status marle_dist_clone(const marle_dist* f, marle_dist** out);
void marle_dist_destroy(marle_dist* f);

/* Mutable flat view, layout value(ip, j) = values[ip * n_inodes + j]. */
double* marle_dist_values(marle_dist* f);
const double* marle_dist_values_const(const marle_dist* f);
size_t marle_dist_size(const marle_dist* f);

/* y := y + alpha x (same grid). */
marle_status marle_dist_axpy(double alpha, const marle_dist* x, marle_dist* y);
marle_status marle_dist_scale(marle_dist* f, double alpha);
/* Clamp negatives to 0; *mass_lost (optional) receives the removed mass. */
marle_status marle_dist_floor_negative(marle_dist* f, double* mass_lost);

/* ---- moments and equilibrium ---------------------------------------- */

marle_status marle_compute_moments(const marle_dist* f, marle_moment_set* out);
marle_status marle_eckart_decompose(const marle_constants* k,
                                    const marle_moment_set* ms, double* n_f,
                                    double U_f[4]);
marle_status marle_number_moment(const marle_dist* f, double* out);

marle_status marle_radial_integrals(const marle_constants* k, double gamma,
                                    double tol, marle_radial_result* out);
marle_status marle_ratio(const marle_constants* k, double gamma, double tol,
                         double* out);
marle_status marle_solve_gamma(const marle_constants* k, double R,
                               double tol_gamma, double tol_radial,
                               double* out);

marle_status marle_equilibrium_from_f(const marle_dist* f,
                                      marle_equilibrium_params* out);
marle_status marle_moment_match_residuals(const marle_dist* f,
                                          const marle_dist* fe,
                                          double* r_scalar, double r_V[4]);

/* ---- dynamics -------------------------------------------------------- */

marle_status marle_relax_exact(const marle_dist* f0, double t,
                               marle_dist** out);
/* stiffness (optional) is set to 1 when dt * nu_max > 2.8. */
marle_status marle_relax_rk4(const marle_dist* f0, double dt, int nsteps,
                             int refreeze, marle_dist** out, int* stiffness);
marle_status marle_diagnostics(const marle_dist* f, double t,
                               marle_diagnostics_record* out);

marle_status marle_slab_create(const marle_grid* g, int ncells, double length,
                               marle_slab** out);
void marle_slab_destroy(marle_slab* s);
size_t marle_slab_ncells(const marle_slab* s);
double marle_slab_time(const marle_slab* s);
double marle_slab_mass_floored(const marle_slab* s);
/* Copy a distribution into / out of cell i (grids must match). */
marle_status marle_slab_set_cell(marle_slab* s, size_t i, const marle_dist* f);
marle_status marle_slab_get_cell(const marle_slab* s, size_t i,
                                 marle_dist** out);
/* Borrowed flat view of cell i's samples; NULL on bad index. */
double* marle_slab_cell_values(marle_slab* s, size_t i);
marle_status marle_slab_step(marle_slab* s, double dt);
marle_status marle_slab_diagnostics(const marle_slab* s,
                                    marle_diagnostics_record* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MARLE_H */
