// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#include "marle/dynamics.hpp"

#include <cmath>

namespace marle {

void collision_frequency(const PhaseGrid& g, std::vector<double>& out) {
  const Constants& k = g.constants();
  const std::size_t np = g.n_pnodes();
  const std::size_t ni = g.n_inodes();
  std::span<const double> p0 = g.p0();
  std::span<const double> ops = g.one_plus_s();
  const double cm_tau = k.c * k.m / k.tau;
  out.resize(g.size());
  for (std::size_t ip = 0; ip < np; ++ip) {
    const double base = cm_tau / p0[ip];
    double* row = out.data() + ip * ni;
    for (std::size_t j = 0; j < ni; ++j) row[j] = base / ops[j];
  }
}

double max_collision_frequency(const PhaseGrid& g) {
  const Constants& k = g.constants();
  std::span<const double> p0 = g.p0();
  double p0_min = p0[0];
  for (double x : p0) p0_min = std::min(p0_min, x);
  const double ops_min = g.one_plus_s()[0];  // nodes ascend in I
  return k.c * k.m / (k.tau * ops_min * p0_min);
}

Distribution collision_rate(const Distribution& f, const Distribution& fe) {
  require_same_grid(f, fe);
  const PhaseGrid& g = f.grid();
  std::vector<double> nu;
  collision_frequency(g, nu);
  Distribution q(f.grid_ptr());
  std::span<const double> fv = f.values();
  std::span<const double> ev = fe.values();
  std::span<double> qv = q.values();
  for (std::size_t i = 0; i < qv.size(); ++i)
    qv[i] = nu[i] * (ev[i] - fv[i]);
  return q;
}

Distribution relax_exact_with(const Distribution& f0, const Distribution& fe,
                              double t) {
  require_same_grid(f0, fe);
  if (!(t >= 0.0)) throw InvalidArgument("relax_exact: t < 0");
  std::vector<double> nu;
  collision_frequency(f0.grid(), nu);
  Distribution f(f0.grid_ptr());
  std::span<const double> v0 = f0.values();
  std::span<const double> ev = fe.values();
  std::span<double> v = f.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double d = std::exp(-nu[i] * t);
    v[i] = ev[i] + (v0[i] - ev[i]) * d;
  }
  return f;
}

Distribution relax_exact(const Distribution& f0, double t,
                         const GammaSolveOptions& opt) {
  const EquilibriumParams p = equilibrium_from_f(f0, opt);
  const Distribution fe = juttner_eval(p, f0.grid_ptr(), opt.tol_radial);
  return relax_exact_with(f0, fe, t);
}

Rk4Result relax_rk4(const Distribution& f0, const Rk4Options& opt) {
  if (!(opt.dt > 0.0)) throw InvalidArgument("relax_rk4: dt must be positive");
  if (opt.nsteps < 0) throw InvalidArgument("relax_rk4: nsteps < 0");

  const PhaseGrid& g = f0.grid();
  std::vector<double> nu;
  collision_frequency(g, nu);
  const double nu_dt = opt.dt * max_collision_frequency(g);

  Rk4Result res{f0, nu_dt > 2.8, nu_dt, 0.0};

  GammaSolveOptions solve = opt.solve;
  EquilibriumParams p = equilibrium_from_f(res.f, solve);
  Distribution fe = juttner_eval(p, f0.grid_ptr(), solve.tol_radial);
  res.gamma_final = p.gamma;

  const std::size_t n = res.f.values().size();
  const double dt = opt.dt;

  auto resolve = [&](const Distribution& state, Distribution& target) {
    solve.hint = res.gamma_final;
    const EquilibriumParams ps = equilibrium_from_f(state, solve);
    target = juttner_eval(ps, f0.grid_ptr(), solve.tol_radial);
    res.gamma_final = ps.gamma;
  };

  if (!opt.refreeze_stages) {
    for (int step = 0; step < opt.nsteps; ++step) {
      if (opt.refreeze && step > 0) resolve(res.f, fe);
      std::span<double> f = res.f.values();
      std::span<const double> e = fe.values();
      // Q is linear in f while fe is frozen, so the four classical stages
      // collapse nodewise: with q = nu dt the RK4 update of (f - fe) is
      // multiplication by 1 - q + q^2/2 - q^3/6 + q^4/24.
      for (std::size_t i = 0; i < n; ++i) {
        const double q = nu[i] * dt;
        const double amp =
            1.0 + q * (-1.0 + q * (0.5 + q * (-1.0 / 6.0 + q / 24.0)));
        f[i] = e[i] + (f[i] - e[i]) * amp;
      }
    }
    return res;
  }

  // Per-stage refreeze: classical RK4 on the full nonlinear right side,
  // Q(y) = nu (f_E[y] - y).
  Distribution stage(f0.grid_ptr());
  std::vector<double> k1(n), k2(n), k3(n), k4(n);
  for (int step = 0; step < opt.nsteps; ++step) {
    std::span<double> f = res.f.values();
    std::span<double> y = stage.values();

    if (step > 0) resolve(res.f, fe);
    std::span<const double> e1 = fe.values();
    for (std::size_t i = 0; i < n; ++i) k1[i] = nu[i] * (e1[i] - f[i]);

    for (std::size_t i = 0; i < n; ++i) y[i] = f[i] + 0.5 * dt * k1[i];
    resolve(stage, fe);
    std::span<const double> e2 = fe.values();
    for (std::size_t i = 0; i < n; ++i) k2[i] = nu[i] * (e2[i] - y[i]);

    for (std::size_t i = 0; i < n; ++i) y[i] = f[i] + 0.5 * dt * k2[i];
    resolve(stage, fe);
    std::span<const double> e3 = fe.values();
    for (std::size_t i = 0; i < n; ++i) k3[i] = nu[i] * (e3[i] - y[i]);

    for (std::size_t i = 0; i < n; ++i) y[i] = f[i] + dt * k3[i];
    resolve(stage, fe);
    std::span<const double> e4 = fe.values();
    for (std::size_t i = 0; i < n; ++i) k4[i] = nu[i] * (e4[i] - y[i]);

    for (std::size_t i = 0; i < n; ++i)
      f[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return res;
}

void collision_substep(Distribution& f, double dt, double* gamma_hint,
                       const GammaSolveOptions& opt) {
  if (!(dt > 0.0)) throw InvalidArgument("collision_substep: dt <= 0");
  std::vector<double> nu;
  collision_frequency(f.grid(), nu);
  std::vector<double> decay(nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i) decay[i] = std::exp(-nu[i] * dt);

  GammaSolveOptions o = opt;
  if (gamma_hint && *gamma_hint > 0.0) o.hint = *gamma_hint;
  const EquilibriumParams p = equilibrium_from_f_matched(f, 2, o);
  if (gamma_hint) *gamma_hint = p.gamma;
  const Distribution fe = juttner_eval(p, f.grid_ptr(), o.tol_radial);
  std::span<double> v = f.values();
  std::span<const double> e = fe.values();
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = e[i] + (v[i] - e[i]) * decay[i];
}

// ---------------------------------------------------------------------------
// Slab transport
// ---------------------------------------------------------------------------

SlabState::SlabState(GridPtr grid, int ncells, double length)
    : grid_(std::move(grid)), length_(length) {
  if (ncells < 2) throw InvalidArgument("SlabState: ncells < 2");
  if (!(length > 0.0)) throw InvalidArgument("SlabState: length <= 0");
  dx_ = length_ / ncells;
  cells_.reserve(static_cast<std::size_t>(ncells));
  for (int i = 0; i < ncells; ++i) cells_.emplace_back(grid_);
  collision_frequency(*grid_, nu_);
  gamma_hint_.assign(static_cast<std::size_t>(ncells), 0.0);
}

void SlabState::advect_half(double dt) {
  const PhaseGrid& g = *grid_;
  const std::size_t np = g.n_pnodes();
  const std::size_t ni = g.n_inodes();
  const std::size_t sz = g.size();
  const std::size_t nc = cells_.size();
  std::span<const double> px = g.px();
  std::span<const double> p0 = g.p0();
  const double c = g.constants().c;
  const double half = 0.5 * dt;

  // courant number per momentum node, sign picks the upwind neighbor
  std::vector<double> theta(np);
  for (std::size_t ip = 0; ip < np; ++ip)
    theta[ip] = c * px[ip] / p0[ip] * half / dx_;

  scratch_.resize(sz * nc);
  for (std::size_t ci = 0; ci < nc; ++ci)
    std::copy(cells_[ci].values().begin(), cells_[ci].values().end(),
              scratch_.begin() + static_cast<std::ptrdiff_t>(ci * sz));

  for (std::size_t ci = 0; ci < nc; ++ci) {
    const double* mid = scratch_.data() + ci * sz;
    const double* left = scratch_.data() + ((ci + nc - 1) % nc) * sz;
    const double* right = scratch_.data() + ((ci + 1) % nc) * sz;
    double* out = cells_[ci].values().data();
    for (std::size_t ip = 0; ip < np; ++ip) {
      const double th = theta[ip];
      const double* nb = (th > 0.0) ? left : right;
      const double a = std::abs(th);
      const std::size_t off = ip * ni;
      for (std::size_t j = 0; j < ni; ++j)
        out[off + j] = mid[off + j] - a * (mid[off + j] - nb[off + j]);
    }
  }
}

void SlabState::step(double dt, const GammaSolveOptions& opt) {
  if (!(dt > 0.0)) throw InvalidArgument("SlabState::step: dt <= 0");
  const double c = grid_->constants().c;
  if (c * dt / dx_ > 1.0 + 1e-12)
    throw CFLViolation("SlabState::step: c dt/dx exceeds 1");

  if (decay_dt_ != dt) {
    decay_.resize(nu_.size());
    for (std::size_t i = 0; i < nu_.size(); ++i)
      decay_[i] = std::exp(-nu_[i] * dt);
    decay_dt_ = dt;
  }

  advect_half(dt);

  // Per-cell collision: discretely matched frozen equilibrium, exact
  // exponential over dt.  The matched solve makes a sampled Juttner an exact
  // fixed point, which keeps the slab's total moments from drifting at the
  // quadrature-defect rate.
  for (std::size_t ci = 0; ci < cells_.size(); ++ci) {
    Distribution& f = cells_[ci];
    mass_floored_ += f.floor_negative();
    GammaSolveOptions o = opt;
    if (gamma_hint_[ci] > 0.0) o.hint = gamma_hint_[ci];
    const EquilibriumParams p = equilibrium_from_f_matched(f, 2, o);
    gamma_hint_[ci] = p.gamma;
    const Distribution fe = juttner_eval(p, grid_, o.tol_radial);
    std::span<double> v = f.values();
    std::span<const double> e = fe.values();
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = e[i] + (v[i] - e[i]) * decay_[i];
  }

  advect_half(dt);
  t_ += dt;
}

// ---------------------------------------------------------------------------
// Diagnostics
// ---------------------------------------------------------------------------

DiagnosticsRecord diagnostics_with(const Distribution& f,
                                   const Distribution& fe, double t) {
  require_same_grid(f, fe);
  const PhaseGrid& g = f.grid();
  const Constants& k = g.constants();
  const MomentSet ms = compute_moments(f);

  DiagnosticsRecord rec;
  rec.t = t;
  rec.N = ms.V[0] / k.mc();
  rec.V = ms.V;
  for (int nu_i = 0; nu_i < 4; ++nu_i)
    rec.T0[static_cast<std::size_t>(nu_i)] =
        ms.T[0][static_cast<std::size_t>(nu_i)];
  rec.h0 = ms.h[0];

  // entropy production -k_B int Q ln f phi dI dp, with Q ln f := 0 at f = 0
  std::vector<double> nu;
  collision_frequency(g, nu);
  std::span<const double> fv = f.values();
  std::span<const double> ev = fe.values();
  const std::size_t ni = g.n_inodes();
  std::span<const double> iw = g.I_weights();
  PairwiseAccumulator acc;
  const std::size_t np = g.n_pnodes();
  for (std::size_t ip = 0; ip < np; ++ip) {
    double inner = 0.0;
    const std::size_t off = ip * ni;
    for (std::size_t j = 0; j < ni; ++j) {
      const double x = fv[off + j];
      if (x > 0.0) inner += nu[off + j] * (ev[off + j] - x) * std::log(x) * iw[j];
    }
    acc.push(inner * g.p_weight());
  }
  rec.entropy_production = -k.k_B * acc.total();

  const MatchResiduals mr = moment_match_residuals(f, fe);
  rec.r_scalar = mr.r_scalar;
  rec.r_V = mr.r_V;
  return rec;
}

DiagnosticsRecord diagnostics(const Distribution& f, double t,
                              const GammaSolveOptions& opt) {
  const EquilibriumParams p = equilibrium_from_f(f, opt);
  const Distribution fe = juttner_eval(p, f.grid_ptr(), opt.tol_radial);
  return diagnostics_with(f, fe, t);
}

DiagnosticsRecord diagnostics(const SlabState& slab,
                              const GammaSolveOptions& opt) {
  DiagnosticsRecord total;
  total.t = slab.time();
  for (std::size_t ci = 0; ci < slab.ncells(); ++ci) {
    const DiagnosticsRecord rec = diagnostics(slab.cell(ci), slab.time(), opt);
    total.N += rec.N * slab.dx();
    for (int mu = 0; mu < 4; ++mu) {
      total.V[mu] += rec.V[mu] * slab.dx();
      total.T0[static_cast<std::size_t>(mu)] +=
          rec.T0[static_cast<std::size_t>(mu)] * slab.dx();
    }
    total.h0 += rec.h0 * slab.dx();
    total.entropy_production += rec.entropy_production * slab.dx();
    total.r_scalar = std::max(total.r_scalar, std::abs(rec.r_scalar));
    for (int mu = 0; mu < 4; ++mu)
      total.r_V[mu] = std::max(std::abs(total.r_V[mu]), std::abs(rec.r_V[mu]));
  }
  return total;
}

}  // namespace marle
