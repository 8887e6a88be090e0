// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#include "marle/juttner.hpp"

#include <cmath>

namespace marle {

void EquilibriumParams::validate(const Constants& k) const {
  if (!(n > 0.0) || !std::isfinite(n))
    throw InvalidArgument("EquilibriumParams: n must be positive");
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw NonPositiveGamma("EquilibriumParams: gamma must be positive");
  for (double c : u)
    if (!std::isfinite(c))
      throw NonFiniteInput("EquilibriumParams: non-finite u");
  (void)k;
}

Distribution juttner_eval(const EquilibriumParams& params, const GridPtr& grid,
                          double tol_radial) {
  const Constants& k = grid->constants();
  params.validate(k);
  const RadialIntegrals ri = radial_integrals(params.gamma, k, tol_radial);

  // f_E = n/M e^{-(1+s)(gamma/mc^2) U.p}
  //     = n / (4 pi (mc)^3 (mc^2)^{sigma+1} I2) * e^{gamma - (1+s)(gamma/mc^2) U.p}
  // The shifted exponent is <= 0 because U.p >= mc c, so nothing overflows.
  const double mc = k.mc();
  const double front =
      params.n / (4.0 * M_PI * mc * mc * mc * ri.unit * ri.m2_scaled);
  const FourVector U = four_velocity_from_spatial(params.u, k);
  const double beta = params.gamma / k.mc2();

  Distribution f(grid);
  const PhaseGrid& g = *grid;
  const std::size_t np = g.n_pnodes();
  const std::size_t ni = g.n_inodes();
  std::span<const double> px = g.px(), py = g.py(), pz = g.pz(), p0 = g.p0();
  std::span<const double> ops = g.one_plus_s();
  std::span<double> v = f.values();

  for (std::size_t ip = 0; ip < np; ++ip) {
    const double updot =
        U[0] * p0[ip] - U[1] * px[ip] - U[2] * py[ip] - U[3] * pz[ip];
    const double base = beta * updot;  // >= gamma
    double* row = v.data() + ip * ni;
    for (std::size_t j = 0; j < ni; ++j)
      row[j] = front * std::exp(params.gamma - ops[j] * base);
  }
  return f;
}

EquilibriumParams equilibrium_from_f(const Distribution& f,
                                     const GammaSolveOptions& opt) {
  if (!f.any_positive())
    throw InvalidArgument("equilibrium_from_f: f is trivially zero");
  const Constants& k = f.grid().constants();
  const MomentSet ms = compute_moments(f);
  const EckartFrame ef = eckart_decompose(ms, k);
  const double R = scalar_moment_ratio(ms, ef);

  EquilibriumParams p;
  p.n = ef.n;
  p.u = {ef.U[1], ef.U[2], ef.U[3]};
  p.gamma = solve_gamma(R, k, opt);
  return p;
}

namespace {

// Analytic solve from explicit moment targets; shared by the plain and the
// defect-corrected parameter recovery.
EquilibriumParams params_from_targets(const FourVector& V, double S,
                                      const Constants& k,
                                      const GammaSolveOptions& opt) {
  MomentSet ms;
  ms.V = V;
  ms.S = S;
  const EckartFrame ef = eckart_decompose(ms, k);
  EquilibriumParams p;
  p.n = ef.n;
  p.u = {ef.U[1], ef.U[2], ef.U[3]};
  p.gamma = solve_gamma(S / ef.n, k, opt);
  return p;
}

}  // namespace

EquilibriumParams equilibrium_from_f_matched(const Distribution& f,
                                             int iterations,
                                             const GammaSolveOptions& opt) {
  if (!f.any_positive())
    throw InvalidArgument("equilibrium_from_f_matched: f is trivially zero");
  const Constants& k = f.grid().constants();
  const MomentSet mf = compute_moments(f);

  GammaSolveOptions o = opt;
  EquilibriumParams p = params_from_targets(mf.V, mf.S, k, o);

  for (int it = 0; it < iterations; ++it) {
    const Distribution ge = juttner_eval(p, f.grid_ptr(), o.tol_radial);
    const MomentSet md = compute_moments(ge);
    // analytic moments of juttner(p): V = m n U^mu, S = n Mtilde/M
    const FourVector U = four_velocity_from_spatial(p.u, k);
    FourVector Va = U * (k.m * p.n);
    const double Sa =
        p.n * ratio(p.gamma, k, o.tol_radial);
    FourVector Vt;
    for (int mu = 0; mu < 4; ++mu) Vt[mu] = mf.V[mu] - (md.V[mu] - Va[mu]);
    const double St = mf.S - (md.S - Sa);
    o.hint = p.gamma;
    p = params_from_targets(Vt, St, k, o);
  }
  return p;
}

MatchResiduals moment_match_residuals(const Distribution& f,
                                      const Distribution& fe) {
  require_same_grid(f, fe);
  const MomentSet mf = compute_moments(f);
  const MomentSet me = compute_moments(fe);

  MatchResiduals r;
  r.r_scalar = (me.S - mf.S) / std::abs(mf.S);
  double vnorm = 0.0;
  for (int mu = 0; mu < 4; ++mu) vnorm += mf.V[mu] * mf.V[mu];
  vnorm = std::sqrt(vnorm);
  for (int mu = 0; mu < 4; ++mu)
    r.r_V[mu] = (me.V[mu] - mf.V[mu]) / vnorm;
  return r;
}

}  // namespace marle
