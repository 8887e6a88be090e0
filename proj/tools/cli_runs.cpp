// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#include "cli_runs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <vector>

#include "csv.hpp"
#include "marle.h"

namespace marle_cli {
namespace {

struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(marle_status st) {
  if (st == MARLE_OK) return;
  const std::string msg = std::string(marle_status_name(st)) + ": " +
                          marle_last_error();
  switch (st) {
    case MARLE_ERR_INVALID_ARGUMENT:
    case MARLE_ERR_INVALID_GRID_CONFIG:
    case MARLE_ERR_NEGATIVE_INTERNAL_ENERGY:
    case MARLE_ERR_GRID_MISMATCH:
      throw ValidationError(msg);
    default:
      throw NumericFailure(msg);
  }
}

struct GridDeleter {
  void operator()(marle_grid* g) const { marle_grid_destroy(g); }
};
struct DistDeleter {
  void operator()(marle_dist* f) const { marle_dist_destroy(f); }
};
struct SlabDeleter {
  void operator()(marle_slab* s) const { marle_slab_destroy(s); }
};
using Grid = std::unique_ptr<marle_grid, GridDeleter>;
using Dist = std::unique_ptr<marle_dist, DistDeleter>;
using Slab = std::unique_ptr<marle_slab, SlabDeleter>;

marle_constants constants_of(const RunConfig& cfg) {
  return {cfg.c, cfg.m, cfg.k_B, cfg.tau, cfg.sigma};
}

Grid make_grid(const RunConfig& cfg, int level = 0) {
  const marle_constants k = constants_of(cfg);
  marle_grid_config gc;
  gc.n_p = cfg.n_p << level;
  gc.p_max = cfg.p_max;
  gc.n_I = cfg.n_I << level;
  gc.s_max = cfg.s_max;
  gc.gamma_min = cfg.gamma_min;
  gc.check_tol = cfg.check_tol;
  marle_grid* g = nullptr;
  check(marle_grid_create(&k, &gc, &g));
  return Grid(g);
}

Dist make_juttner(const marle_grid* g, double n, double ux, double uy,
                  double uz, double gamma) {
  marle_equilibrium_params p{n, {ux, uy, uz}, gamma};
  marle_dist* f = nullptr;
  check(marle_dist_create_juttner(g, &p, &f));
  return Dist(f);
}

/// Builds the initial condition named by cfg.preset on the given grid.
Dist make_preset(const RunConfig& cfg, const marle_grid* g) {
  if (cfg.preset == "single")
    return make_juttner(g, cfg.n, cfg.ux, cfg.uy, cfg.uz, cfg.gamma);

  if (cfg.preset == "mixture") {
    Dist a = make_juttner(g, cfg.n * cfg.weight_a, 0, 0, 0, cfg.gamma_a);
    Dist b = make_juttner(g, cfg.n * cfg.weight_b, 0, 0, 0, cfg.gamma_b);
    check(marle_dist_axpy(1.0, b.get(), a.get()));
    return a;
  }

  // bump: Juttner plus a Gaussian shell perturbation in |p|, decaying in I
  Dist f = make_juttner(g, cfg.n, cfg.ux, cfg.uy, cfg.uz, cfg.gamma);
  const double* px = marle_grid_px(g);
  const double* py = marle_grid_py(g);
  const double* pz = marle_grid_pz(g);
  const double* In = marle_grid_I_nodes(g);
  const size_t np = marle_grid_num_pnodes(g);
  const size_t ni = marle_grid_num_inodes(g);
  double* v = marle_dist_values(f.get());
  double fmax = 0.0;
  for (size_t i = 0; i < np * ni; ++i) fmax = std::max(fmax, v[i]);
  const double mc2 = cfg.m * cfg.c * cfg.c;
  for (size_t ip = 0; ip < np; ++ip) {
    const double pr = std::sqrt(px[ip] * px[ip] + py[ip] * py[ip] +
                                pz[ip] * pz[ip]);
    const double shell = (pr - cfg.bump_p) / cfg.bump_width;
    const double wp = std::exp(-shell * shell);
    for (size_t j = 0; j < ni; ++j)
      v[ip * ni + j] +=
          cfg.bump_amplitude * fmax * wp * std::exp(-In[j] / mc2);
  }
  double lost = 0.0;
  check(marle_dist_floor_negative(f.get(), &lost));
  if (lost > 0.0)
    std::fprintf(stderr, "note: bump preset floored mass %.3e\n", lost);
  return f;
}

void diagnostics_row(CsvWriter& csv, const marle_diagnostics_record& d) {
  csv.row() << d.t << d.N << d.V[0] << d.V[1] << d.V[2] << d.V[3] << d.T0[0]
            << d.T0[1] << d.T0[2] << d.T0[3] << d.h0 << d.entropy_production
            << d.r_scalar << d.r_V[0] << d.r_V[1] << d.r_V[2] << d.r_V[3];
}

const std::vector<std::string> kDiagnosticsHeader = {
    "t",  "N",  "V0", "V1", "V2",  "V3",                "T00",
    "T01", "T02", "T03", "h0", "entropy_production", "r_scalar",
    "r_V0", "r_V1", "r_V2", "r_V3"};

int guarded_run(const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 1;
  } catch (const NumericFailure& e) {
    std::fprintf(stderr, "numeric failure: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}

}  // namespace

int run_mcurves(const RunConfig& cfg, const std::string& out_path) {
  return guarded_run([&] {
    const marle_constants k = constants_of(cfg);
    const double mc = cfg.m * cfg.c;
    CsvWriter csv(out_path,
                  {"gamma", "M", "Mtilde", "ratio", "upper_bound",
                   "lower_bound", "monotone_ok"},
                  cfg.precision);
    double prev = -1.0;
    for (int i = 0; i < cfg.scan_points; ++i) {
      const double gamma =
          cfg.scan_min *
          std::pow(cfg.scan_max / cfg.scan_min,
                   static_cast<double>(i) / (cfg.scan_points - 1));
      marle_radial_result r;
      check(marle_radial_integrals(&k, gamma, cfg.tol, &r));
      const double upper = gamma / mc;
      const double radicand = 1.0 - (2.0 * cfg.sigma + 5.0) / gamma;
      auto row = csv.row();
      row << gamma << r.M << r.Mtilde << r.ratio << upper;
      if (radicand > 0.0)
        row << std::sqrt(radicand) / mc;
      else
        row.empty();
      row << std::string(r.ratio > prev ? "1" : "0");
      prev = r.ratio;
    }
  });
}

int run_equilibrate(const RunConfig& cfg, const std::string& out_path) {
  return guarded_run([&] {
    CsvWriter csv(out_path,
                  {"level", "N_p", "N_I", "n", "ux", "uy", "uz", "gamma",
                   "r_scalar", "r_V0", "r_V1", "r_V2", "r_V3"},
                  cfg.precision);
    for (int level = 0; level <= cfg.refine_levels; ++level) {
      Grid g = make_grid(cfg, level);
      Dist f = make_preset(cfg, g.get());
      marle_equilibrium_params p;
      check(marle_equilibrium_from_f(f.get(), &p));
      marle_dist* fe_raw = nullptr;
      check(marle_dist_create_juttner(g.get(), &p, &fe_raw));
      Dist fe(fe_raw);
      double r_scalar = 0.0;
      double r_V[4];
      check(marle_moment_match_residuals(f.get(), fe.get(), &r_scalar, r_V));
      csv.row() << level << (cfg.n_p << level) << (cfg.n_I << level) << p.n
                << p.u[0] << p.u[1] << p.u[2] << p.gamma << r_scalar << r_V[0]
                << r_V[1] << r_V[2] << r_V[3];
    }
  });
}

int run_relax(const RunConfig& cfg, const std::string& out_path) {
  return guarded_run([&] {
    Grid g = make_grid(cfg);
    Dist f0 = make_preset(cfg, g.get());
    CsvWriter csv(out_path, kDiagnosticsHeader, cfg.precision);

    if (cfg.integrator == "exact") {
      for (int i = 0; i <= cfg.nout; ++i) {
        const double t = cfg.t_end * i / cfg.nout;
        marle_diagnostics_record d;
        if (i == 0) {
          check(marle_diagnostics(f0.get(), 0.0, &d));
        } else {
          marle_dist* ft_raw = nullptr;
          check(marle_relax_exact(f0.get(), t, &ft_raw));
          Dist ft(ft_raw);
          check(marle_diagnostics(ft.get(), t, &d));
        }
        diagnostics_row(csv, d);
      }
      return;
    }

    // rk4: one row per output_every steps
    marle_diagnostics_record d;
    check(marle_diagnostics(f0.get(), 0.0, &d));
    diagnostics_row(csv, d);
    marle_dist* f_raw = nullptr;
    check(marle_dist_clone(f0.get(), &f_raw));
    Dist f(f_raw);
    int done = 0;
    while (done < cfg.nsteps) {
      const int chunk = std::min(cfg.output_every, cfg.nsteps - done);
      marle_dist* next = nullptr;
      int stiff = 0;
      if (cfg.refreeze) {
        check(marle_relax_rk4(f.get(), cfg.dt, chunk, 1, &next, &stiff));
        f.reset(next);
      } else {
        // frozen equilibrium: restart from t = 0 so nothing re-freezes
        check(marle_relax_rk4(f0.get(), cfg.dt, done + chunk, 0, &next,
                              &stiff));
        f.reset(next);
      }
      done += chunk;
      if (stiff)
        std::fprintf(stderr,
                     "warning: dt * nu_max > 2.8 (RK4 stability bound)\n");
      check(marle_diagnostics(f.get(), done * cfg.dt, &d));
      diagnostics_row(csv, d);
    }
  });
}

int run_transport(const RunConfig& cfg, const std::string& out_path) {
  return guarded_run([&] {
    Grid g = make_grid(cfg);
    Dist base = make_preset(cfg, g.get());

    marle_slab* slab_raw = nullptr;
    check(marle_slab_create(g.get(), cfg.ncells, cfg.length, &slab_raw));
    Slab slab(slab_raw);

    const double dx = cfg.length / cfg.ncells;
    const size_t sz = marle_dist_size(base.get());
    for (int ci = 0; ci < cfg.ncells; ++ci) {
      const double x = (ci + 0.5) * dx;
      const double scale =
          1.0 + cfg.amplitude * std::sin(2.0 * M_PI * x / cfg.length);
      check(marle_slab_set_cell(slab.get(), static_cast<size_t>(ci),
                                base.get()));
      double* v = marle_slab_cell_values(slab.get(), static_cast<size_t>(ci));
      for (size_t i = 0; i < sz; ++i) v[i] *= scale;
    }

    CsvWriter csv(out_path, kDiagnosticsHeader, cfg.precision);
    marle_diagnostics_record d;
    check(marle_slab_diagnostics(slab.get(), &d));
    diagnostics_row(csv, d);
    for (int step = 1; step <= cfg.nsteps; ++step) {
      check(marle_slab_step(slab.get(), cfg.dt));
      if (step % cfg.output_every == 0 || step == cfg.nsteps) {
        check(marle_slab_diagnostics(slab.get(), &d));
        diagnostics_row(csv, d);
      }
    }
  });
}

}  // namespace marle_cli
