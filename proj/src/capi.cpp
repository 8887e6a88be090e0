// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#include "marle.h"

#include <cstring>
#include <new>
#include <string>

#include "marle/dynamics.hpp"
#include "marle/juttner.hpp"
#include "marle/lorentz.hpp"

namespace {

thread_local std::string g_last_error;

marle::Constants to_constants(const marle_constants* k) {
  if (!k) throw marle::InvalidArgument("null constants");
  marle::Constants c;
  c.c = k->c;
  c.m = k->m;
  c.k_B = k->k_B;
  c.tau = k->tau;
  c.sigma = k->sigma;
  c.validate();
  return c;
}

marle_status from_code(marle::ErrorCode code) {
  using EC = marle::ErrorCode;
  switch (code) {
    case EC::invalid_argument: return MARLE_ERR_INVALID_ARGUMENT;
    case EC::non_finite_input: return MARLE_ERR_NONFINITE_INPUT;
    case EC::negative_internal_energy: return MARLE_ERR_NEGATIVE_INTERNAL_ENERGY;
    case EC::invalid_grid_config: return MARLE_ERR_INVALID_GRID_CONFIG;
    case EC::grid_mismatch: return MARLE_ERR_GRID_MISMATCH;
    case EC::non_timelike_flux: return MARLE_ERR_NON_TIMELIKE_FLUX;
    case EC::negative_time_component: return MARLE_ERR_NEGATIVE_TIME_COMPONENT;
    case EC::non_positive_gamma: return MARLE_ERR_NONPOSITIVE_GAMMA;
    case EC::ratio_out_of_range: return MARLE_ERR_RATIO_OUT_OF_RANGE;
    case EC::bracket_failure: return MARLE_ERR_BRACKET_FAILURE;
    case EC::tolerance_not_reached: return MARLE_ERR_TOLERANCE_NOT_REACHED;
    case EC::cfl_violation: return MARLE_ERR_CFL_VIOLATION;
  }
  return MARLE_ERR_INTERNAL;
}

template <class F>
marle_status guarded(F&& fn) {
  try {
    fn();
    return MARLE_OK;
  } catch (const marle::Error& e) {
    g_last_error = e.what();
    return from_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "allocation failure";
    return MARLE_ERR_ALLOC;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MARLE_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return MARLE_ERR_INTERNAL;
  }
}

}  // namespace

struct marle_grid {
  marle::GridPtr grid;
};

struct marle_dist {
  marle::Distribution dist;
};

struct marle_slab {
  marle::SlabState slab;
};

extern "C" {

const char* marle_version(void) { return "0.1.0"; }

const char* marle_status_name(marle_status s) {
  switch (s) {
    case MARLE_OK: return "ok";
    case MARLE_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MARLE_ERR_NONFINITE_INPUT: return "non-finite input";
    case MARLE_ERR_NEGATIVE_INTERNAL_ENERGY: return "negative internal energy";
    case MARLE_ERR_INVALID_GRID_CONFIG: return "invalid grid config";
    case MARLE_ERR_GRID_MISMATCH: return "grid mismatch";
    case MARLE_ERR_NON_TIMELIKE_FLUX: return "non-timelike flux";
    case MARLE_ERR_NEGATIVE_TIME_COMPONENT: return "negative time component";
    case MARLE_ERR_NONPOSITIVE_GAMMA: return "non-positive gamma";
    case MARLE_ERR_RATIO_OUT_OF_RANGE: return "ratio out of range";
    case MARLE_ERR_BRACKET_FAILURE: return "bracket failure";
    case MARLE_ERR_TOLERANCE_NOT_REACHED: return "tolerance not reached";
    case MARLE_ERR_CFL_VIOLATION: return "CFL violation";
    case MARLE_ERR_ALLOC: return "allocation failure";
    case MARLE_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* marle_last_error(void) { return g_last_error.c_str(); }

/* ---- core ---------------------------------------------------------- */

marle_status marle_minkowski_dot(const double a[4], const double b[4],
                                 double* out) {
  return guarded([&] {
    if (!a || !b || !out) throw marle::InvalidArgument("null pointer");
    marle::FourVector av{a[0], a[1], a[2], a[3]};
    marle::FourVector bv{b[0], b[1], b[2], b[3]};
    *out = marle::minkowski_dot(av, bv);
  });
}

marle_status marle_four_velocity(const marle_constants* k, const double u[3],
                                 double U[4]) {
  return guarded([&] {
    if (!u || !U) throw marle::InvalidArgument("null pointer");
    const marle::Constants c = to_constants(k);
    const marle::FourVector v =
        marle::four_velocity_from_spatial({u[0], u[1], u[2]}, c);
    for (int i = 0; i < 4; ++i) U[i] = v[i];
  });
}

marle_status marle_boost_matrices(const marle_constants* k, const double U[4],
                                  double lambda[16], double inv[16]) {
  return guarded([&] {
    if (!U) throw marle::InvalidArgument("null pointer");
    const marle::Constants c = to_constants(k);
    const marle::LorentzBoost b = marle::LorentzBoost::from_four_velocity(
        marle::FourVector{U[0], U[1], U[2], U[3]}, c);
    if (lambda)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          lambda[4 * i + j] = b.matrix()[static_cast<std::size_t>(i)]
                                        [static_cast<std::size_t>(j)];
    if (inv)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          inv[4 * i + j] = b.inverse_matrix()[static_cast<std::size_t>(i)]
                                             [static_cast<std::size_t>(j)];
  });
}

marle_status marle_state_density(double I, double sigma, double* out) {
  return guarded([&] {
    if (!out) throw marle::InvalidArgument("null pointer");
    *out = marle::state_density(I, sigma);
  });
}

/* ---- phase grid and distributions ----------------------------------- */

marle_status marle_grid_create(const marle_constants* k,
                               const marle_grid_config* cfg,
                               marle_grid** out) {
  return guarded([&] {
    if (!cfg || !out) throw marle::InvalidArgument("null pointer");
    const marle::Constants c = to_constants(k);
    marle::GridConfig gc;
    gc.n_p = cfg->n_p;
    gc.p_max = cfg->p_max;
    gc.n_I = cfg->n_I;
    gc.s_max = cfg->s_max;
    gc.gamma_min = cfg->gamma_min;
    gc.check_tol = cfg->check_tol > 0.0 ? cfg->check_tol : 1e-8;
    *out = new marle_grid{marle::build_phase_grid(gc, c)};
  });
}

void marle_grid_destroy(marle_grid* g) { delete g; }

size_t marle_grid_num_pnodes(const marle_grid* g) {
  return g ? g->grid->n_pnodes() : 0;
}
size_t marle_grid_num_inodes(const marle_grid* g) {
  return g ? g->grid->n_inodes() : 0;
}
size_t marle_grid_size(const marle_grid* g) { return g ? g->grid->size() : 0; }
double marle_grid_phi_check_error(const marle_grid* g) {
  return g ? g->grid->phi_check_error() : -1.0;
}
double marle_grid_p_max(const marle_grid* g) {
  return g ? g->grid->config().p_max : 0.0;
}
double marle_grid_s_max(const marle_grid* g) {
  return g ? g->grid->config().s_max : 0.0;
}

const double* marle_grid_px(const marle_grid* g) {
  return g ? g->grid->px().data() : nullptr;
}
const double* marle_grid_py(const marle_grid* g) {
  return g ? g->grid->py().data() : nullptr;
}
const double* marle_grid_pz(const marle_grid* g) {
  return g ? g->grid->pz().data() : nullptr;
}
const double* marle_grid_p0(const marle_grid* g) {
  return g ? g->grid->p0().data() : nullptr;
}
const double* marle_grid_I_nodes(const marle_grid* g) {
  return g ? g->grid->I_nodes().data() : nullptr;
}
const double* marle_grid_I_weights(const marle_grid* g) {
  return g ? g->grid->I_weights().data() : nullptr;
}
double marle_grid_p_weight(const marle_grid* g) {
  return g ? g->grid->p_weight() : 0.0;
}

marle_status marle_dist_create_zero(const marle_grid* g, marle_dist** out) {
  return guarded([&] {
    if (!g || !out) throw marle::InvalidArgument("null pointer");
    *out = new marle_dist{marle::Distribution(g->grid)};
  });
}

marle_status marle_dist_create_juttner(const marle_grid* g,
                                       const marle_equilibrium_params* p,
                                       marle_dist** out) {
  return guarded([&] {
    if (!g || !p || !out) throw marle::InvalidArgument("null pointer");
    marle::EquilibriumParams ep;
    ep.n = p->n;
    ep.u = {p->u[0], p->u[1], p->u[2]};
    ep.gamma = p->gamma;
    *out = new marle_dist{marle::juttner_eval(ep, g->grid)};
  });
}

marle_status marle_dist_clone(const marle_dist* f, marle_dist** out) {
  return guarded([&] {
    if (!f || !out) throw marle::InvalidArgument("null pointer");
    *out = new marle_dist{f->dist};
  });
}

void marle_dist_destroy(marle_dist* f) { delete f; }

double* marle_dist_values(marle_dist* f) {
  return f ? f->dist.values().data() : nullptr;
}
const double* marle_dist_values_const(const marle_dist* f) {
  return f ? f->dist.values().data() : nullptr;
}
size_t marle_dist_size(const marle_dist* f) {
  return f ? f->dist.values().size() : 0;
}

marle_status marle_dist_axpy(double alpha, const marle_dist* x,
                             marle_dist* y) {
  return guarded([&] {
    if (!x || !y) throw marle::InvalidArgument("null pointer");
    marle::require_same_grid(x->dist, y->dist);
    std::span<const double> xv = x->dist.values();
    std::span<double> yv = y->dist.values();
    for (std::size_t i = 0; i < yv.size(); ++i) yv[i] += alpha * xv[i];
  });
}

marle_status marle_dist_scale(marle_dist* f, double alpha) {
  return guarded([&] {
    if (!f) throw marle::InvalidArgument("null pointer");
    for (double& v : f->dist.values()) v *= alpha;
  });
}

marle_status marle_dist_floor_negative(marle_dist* f, double* mass_lost) {
  return guarded([&] {
    if (!f) throw marle::InvalidArgument("null pointer");
    const double lost = f->dist.floor_negative();
    if (mass_lost) *mass_lost = lost;
  });
}

/* ---- moments and equilibrium ---------------------------------------- */

marle_status marle_compute_moments(const marle_dist* f,
                                   marle_moment_set* out) {
  return guarded([&] {
    if (!f || !out) throw marle::InvalidArgument("null pointer");
    const marle::MomentSet ms = marle::compute_moments(f->dist);
    for (int i = 0; i < 4; ++i) {
      out->V[i] = ms.V[i];
      out->h[i] = ms.h[i];
      for (int j = 0; j < 4; ++j)
        out->T[4 * i + j] = ms.T[static_cast<std::size_t>(i)]
                                [static_cast<std::size_t>(j)];
    }
    out->S = ms.S;
  });
}

marle_status marle_eckart_decompose(const marle_constants* k,
                                    const marle_moment_set* ms, double* n_f,
                                    double U_f[4]) {
  return guarded([&] {
    if (!ms || !n_f || !U_f) throw marle::InvalidArgument("null pointer");
    const marle::Constants c = to_constants(k);
    marle::MomentSet m;
    for (int i = 0; i < 4; ++i) {
      m.V[i] = ms->V[i];
      m.h[i] = ms->h[i];
      for (int j = 0; j < 4; ++j)
        m.T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            ms->T[4 * i + j];
    }
    m.S = ms->S;
    const marle::EckartFrame ef = marle::eckart_decompose(m, c);
    *n_f = ef.n;
    for (int i = 0; i < 4; ++i) U_f[i] = ef.U[i];
  });
}

marle_status marle_number_moment(const marle_dist* f, double* out) {
  return guarded([&] {
    if (!f || !out) throw marle::InvalidArgument("null pointer");
    *out = marle::number_moment(f->dist);
  });
}

marle_status marle_radial_integrals(const marle_constants* k, double gamma,
                                    double tol, marle_radial_result* out) {
  return guarded([&] {
    if (!out) throw marle::InvalidArgument("null pointer");
    const marle::Constants c = to_constants(k);
    const marle::RadialIntegrals ri =
        marle::radial_integrals(gamma, c, tol > 0 ? tol : 1e-10);
    out->gamma = ri.gamma;
    out->M = ri.M();
    out->Mtilde = ri.Mtilde();
    out->M1 = ri.M1();
    out->M2 = ri.M2();
    out->M3 = ri.M3();
    out->M1_scaled = ri.m1_scaled;
    out->M2_scaled = ri.m2_scaled;
    out->M3_scaled = ri.m3_scaled;
    out->log_scale = ri.log_scale;
    out->ratio = ri.ratio();
  });
}

marle_status marle_ratio(const marle_constants* k, double gamma, double tol,
                         double* out) {
  return guarded([&] {
    if (!out) throw marle::InvalidArgument("null pointer");
    const marle::Constants c = to_constants(k);
    *out = marle::ratio(gamma, c, tol > 0 ? tol : 1e-10);
  });
}

marle_status marle_solve_gamma(const marle_constants* k, double R,
                               double tol_gamma, double tol_radial,
                               double* out) {
  return guarded([&] {
    if (!out) throw marle::InvalidArgument("null pointer");
    const marle::Constants c = to_constants(k);
    marle::GammaSolveOptions opt;
    if (tol_gamma > 0) opt.tol_gamma = tol_gamma;
    if (tol_radial > 0) opt.tol_radial = tol_radial;
    *out = marle::solve_gamma(R, c, opt);
  });
}

marle_status marle_equilibrium_from_f(const marle_dist* f,
                                      marle_equilibrium_params* out) {
  return guarded([&] {
    if (!f || !out) throw marle::InvalidArgument("null pointer");
    const marle::EquilibriumParams p = marle::equilibrium_from_f(f->dist);
    out->n = p.n;
    for (int i = 0; i < 3; ++i) out->u[i] = p.u[static_cast<std::size_t>(i)];
    out->gamma = p.gamma;
  });
}

marle_status marle_moment_match_residuals(const marle_dist* f,
                                          const marle_dist* fe,
                                          double* r_scalar, double r_V[4]) {
  return guarded([&] {
    if (!f || !fe) throw marle::InvalidArgument("null pointer");
    const marle::MatchResiduals r =
        marle::moment_match_residuals(f->dist, fe->dist);
    if (r_scalar) *r_scalar = r.r_scalar;
    if (r_V)
      for (int i = 0; i < 4; ++i) r_V[i] = r.r_V[i];
  });
}

/* ---- dynamics -------------------------------------------------------- */

marle_status marle_relax_exact(const marle_dist* f0, double t,
                               marle_dist** out) {
  return guarded([&] {
    if (!f0 || !out) throw marle::InvalidArgument("null pointer");
    *out = new marle_dist{marle::relax_exact(f0->dist, t)};
  });
}

marle_status marle_relax_rk4(const marle_dist* f0, double dt, int nsteps,
                             int refreeze, marle_dist** out, int* stiffness) {
  return guarded([&] {
    if (!f0 || !out) throw marle::InvalidArgument("null pointer");
    marle::Rk4Options opt;
    opt.dt = dt;
    opt.nsteps = nsteps;
    opt.refreeze = refreeze != 0;
    marle::Rk4Result r = marle::relax_rk4(f0->dist, opt);
    if (stiffness) *stiffness = r.stiffness_warning ? 1 : 0;
    *out = new marle_dist{std::move(r.f)};
  });
}

marle_status marle_diagnostics(const marle_dist* f, double t,
                               marle_diagnostics_record* out) {
  return guarded([&] {
    if (!f || !out) throw marle::InvalidArgument("null pointer");
    const marle::DiagnosticsRecord rec = marle::diagnostics(f->dist, t);
    out->t = rec.t;
    out->N = rec.N;
    for (int i = 0; i < 4; ++i) {
      out->V[i] = rec.V[i];
      out->T0[i] = rec.T0[static_cast<std::size_t>(i)];
      out->r_V[i] = rec.r_V[i];
    }
    out->h0 = rec.h0;
    out->entropy_production = rec.entropy_production;
    out->r_scalar = rec.r_scalar;
  });
}

marle_status marle_slab_create(const marle_grid* g, int ncells, double length,
                               marle_slab** out) {
  return guarded([&] {
    if (!g || !out) throw marle::InvalidArgument("null pointer");
    *out = new marle_slab{marle::SlabState(g->grid, ncells, length)};
  });
}

void marle_slab_destroy(marle_slab* s) { delete s; }

size_t marle_slab_ncells(const marle_slab* s) {
  return s ? s->slab.ncells() : 0;
}
double marle_slab_time(const marle_slab* s) { return s ? s->slab.time() : 0.0; }
double marle_slab_mass_floored(const marle_slab* s) {
  return s ? s->slab.mass_floored() : 0.0;
}

marle_status marle_slab_set_cell(marle_slab* s, size_t i,
                                 const marle_dist* f) {
  return guarded([&] {
    if (!s || !f) throw marle::InvalidArgument("null pointer");
    if (i >= s->slab.ncells())
      throw marle::InvalidArgument("slab cell index out of range");
    marle::require_same_grid(s->slab.cell(i), f->dist);
    s->slab.cell(i) = f->dist;
  });
}

marle_status marle_slab_get_cell(const marle_slab* s, size_t i,
                                 marle_dist** out) {
  return guarded([&] {
    if (!s || !out) throw marle::InvalidArgument("null pointer");
    if (i >= s->slab.ncells())
      throw marle::InvalidArgument("slab cell index out of range");
    *out = new marle_dist{s->slab.cell(i)};
  });
}

double* marle_slab_cell_values(marle_slab* s, size_t i) {
  if (!s || i >= s->slab.ncells()) return nullptr;
  return s->slab.cell(i).values().data();
}

marle_status marle_slab_step(marle_slab* s, double dt) {
  return guarded([&] {
    if (!s) throw marle::InvalidArgument("null pointer");
    s->slab.step(dt);
  });
}

marle_status marle_slab_diagnostics(const marle_slab* s,
                                    marle_diagnostics_record* out) {
  return guarded([&] {
    if (!s || !out) throw marle::InvalidArgument("null pointer");
    const marle::DiagnosticsRecord rec = marle::diagnostics(s->slab);
    out->t = rec.t;
    out->N = rec.N;
    for (int i = 0; i < 4; ++i) {
      out->V[i] = rec.V[i];
      out->T0[i] = rec.T0[static_cast<std::size_t>(i)];
      out->r_V[i] = rec.r_V[i];
    }
    out->h0 = rec.h0;
    out->entropy_production = rec.entropy_production;
    out->r_scalar = rec.r_scalar;
  });
}

} /* extern "C" */
