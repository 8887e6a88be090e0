// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "common.hpp"
#include "marle/moments.hpp"

using namespace marle;

TEST_CASE("juttner peak value is (n/M) e^{-gamma} at rest") {
  // u = 0: the exponent -(1+I/mc^2)(gamma/mc^2) U.p is maximal (= -gamma) at
  // p = 0, I -> 0, so that value bounds every sample and nearby nodes
  // approach it
  const Constants k = Constants::natural();
  const GridPtr g = testutil::coarse_grid(k);
  const double gamma = 2.0;
  const Distribution f = juttner_eval({1.0, {0, 0, 0}, gamma}, g);
  const double peak = std::exp(-gamma) / radial_integrals(gamma, k, 1e-12).M();

  double fmax = 0.0;
  for (double v : f.values()) fmax = std::max(fmax, v);
  CHECK(fmax <= peak * (1.0 + 1e-12));

  // nearest node to (p = 0, smallest I): the sampled value must equal the
  // formula with the node's own exponent
  std::size_t best = 0;
  for (std::size_t ip = 1; ip < g->n_pnodes(); ++ip)
    if (g->p0()[ip] < g->p0()[best]) best = ip;
  const double s0 = g->I_nodes()[0] / k.mc2();
  const double expect =
      peak * std::exp(-gamma * ((1.0 + s0) * g->p0()[best] / k.mc() - 1.0));
  CHECK(f.at(best, 0) == doctest::Approx(expect).epsilon(1e-11));
}

TEST_CASE("juttner normalization reproduces n") {
  const Constants k = Constants::natural();
  {
    const GridPtr g = testutil::reference_grid(k);
    const Distribution f = juttner_eval({1.7, {0, 0, 0}, 3.0}, g);
    CHECK(number_moment(f) == doctest::Approx(1.7).epsilon(1e-5));
  }
  {
    const GridPtr g = testutil::cold_grid(k);
    const Distribution f = juttner_eval({1.7, {0, 0, 0}, 8.0}, g);
    CHECK(number_moment(f) == doctest::Approx(1.7).epsilon(5e-5));
  }
}

TEST_CASE("equilibrium_from_f round trip at rest") {
  const Constants k = Constants::natural();
  const GridPtr g = testutil::reference_grid(k);
  const EquilibriumParams in{1.0, {0, 0, 0}, 3.0};
  const Distribution f = juttner_eval(in, g);
  const EquilibriumParams out = equilibrium_from_f(f);
  CHECK(out.n == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(out.gamma == doctest::Approx(3.0).epsilon(1e-4));
  for (double c : out.u) CHECK(std::abs(c) < 1e-10);
}

TEST_CASE("equilibrium_from_f round trip boosted, errors shrink on refinement") {
  const Constants k = Constants::natural();
  const EquilibriumParams in{1.0, {0.577, 0, 0}, 3.0};  // v = 0.5c

  auto recover = [&](int np, int ni) {
    const GridPtr g = testutil::make_grid(k, np, 14.0, ni, 60.0, 1e-2);
    const Distribution f = juttner_eval(in, g);
    const EquilibriumParams out = equilibrium_from_f(f);
    return std::max({std::abs(out.n - in.n), std::abs(out.gamma - in.gamma) / in.gamma,
                     std::abs(out.u[0] - in.u[0])});
  };
  const double coarse = recover(28, 16);
  const double fine = recover(56, 32);
  CHECK(fine < coarse / 3.0);
  CHECK(fine < 1e-3);
}

TEST_CASE("mixture recovery lies between the component gammas") {
  const Constants k = Constants::natural();
  const GridPtr g = testutil::reference_grid(k);
  Distribution f = juttner_eval({0.5, {0, 0, 0}, 2.0}, g);
  const Distribution fb = juttner_eval({0.5, {0, 0, 0}, 8.0}, g);
  for (std::size_t i = 0; i < f.values().size(); ++i)
    f.values()[i] += fb.values()[i];

  const EquilibriumParams out = equilibrium_from_f(f);
  CHECK(out.gamma > 2.0);
  CHECK(out.gamma < 8.0);
  // independently computed with high-accuracy continuum quadrature
  CHECK(out.gamma == doctest::Approx(3.7769128844).epsilon(2e-5));

  const Distribution fe = juttner_eval(out, f.grid_ptr());
  const MatchResiduals r = moment_match_residuals(f, fe);
  CHECK(std::abs(r.r_scalar) < 1e-6);
  for (int mu = 0; mu < 4; ++mu) CHECK(std::abs(r.r_V[mu]) < 1e-6);
}

TEST_CASE("residuals vanish identically for fe = f") {
  const Constants k = Constants::natural();
  const GridPtr g = testutil::coarse_grid(k);
  const Distribution f = juttner_eval({1.0, {0.1, 0.2, -0.3}, 2.0}, g);
  const MatchResiduals r = moment_match_residuals(f, f);
  CHECK(r.r_scalar == 0.0);
  for (int mu = 0; mu < 4; ++mu) CHECK(r.r_V[mu] == 0.0);
}

TEST_CASE("wrong gamma leaves a visible scalar residual") {
  const Constants k = Constants::natural();
  const GridPtr g = testutil::reference_grid(k);
  const Distribution f = juttner_eval({1.0, {0, 0, 0}, 3.0}, g);
  const EquilibriumParams p = equilibrium_from_f(f);
  EquilibriumParams wrong = p;
  wrong.gamma *= 1.1;
  const Distribution fe = juttner_eval(wrong, f.grid_ptr());
  const MatchResiduals r = moment_match_residuals(f, fe);
  CHECK(std::abs(r.r_scalar) > 1e-3);
}

TEST_CASE("perturbing one cell moves parameters continuously") {
  const Constants k = Constants::natural();
  const GridPtr g = testutil::coarse_grid(k);
  Distribution f = juttner_eval({1.0, {0, 0, 0}, 3.0}, g);
  const EquilibriumParams base = equilibrium_from_f(f);

  const std::size_t mid = f.values().size() / 2;
  const double delta = 1e-4 * f.values()[mid];
  f.values()[mid] += delta;
  const EquilibriumParams bumped = equilibrium_from_f(f);
  CHECK(std::abs(bumped.gamma - base.gamma) / base.gamma < 1e-4);
  CHECK(std::abs(bumped.n - base.n) / base.n < 1e-4);

  const Distribution fe = juttner_eval(bumped, f.grid_ptr());
  const MatchResiduals r = moment_match_residuals(f, fe);
  CHECK(std::abs(r.r_scalar) < 1e-5);
}

TEST_CASE("trivially zero input is rejected") {
  const Constants k = Constants::natural();
  const GridPtr g = testutil::coarse_grid(k);
  const Distribution f(g);
  CHECK_THROWS_AS(equilibrium_from_f(f), InvalidArgument);
}

TEST_CASE("matched solve makes a sampled juttner an exact fixed point") {
  const Constants k = Constants::natural();
  const GridPtr g = testutil::coarse_grid(k);
  const EquilibriumParams in{1.4, {0.2, 0, 0}, 2.5};
  const Distribution f = juttner_eval(in, g);

  const EquilibriumParams m = equilibrium_from_f_matched(f, 2);
  const Distribution fe = juttner_eval(m, f.grid_ptr());

  // discrete moments of fe match those of f to near round-off, so the
  // collision operator sees an exact equilibrium
  const MatchResiduals r = moment_match_residuals(f, fe);
  CHECK(std::abs(r.r_scalar) < 1e-12);
  for (int mu = 0; mu < 4; ++mu) CHECK(std::abs(r.r_V[mu]) < 1e-12);

  // and the corrected parameters agree with the sampling parameters to the
  // same level (the analytic solve differs at the grid-defect level instead)
  CHECK(m.n == doctest::Approx(in.n).epsilon(1e-12));
  CHECK(m.gamma == doctest::Approx(in.gamma).epsilon(1e-10));
  CHECK(m.u[0] == doctest::Approx(in.u[0]).epsilon(1e-10));
}

TEST_CASE("juttner rejects invalid parameters") {
  const Constants k = Constants::natural();
  const GridPtr g = testutil::coarse_grid(k);
  CHECK_THROWS_AS(juttner_eval({-1.0, {0, 0, 0}, 2.0}, g), InvalidArgument);
  CHECK_THROWS_AS(juttner_eval({1.0, {0, 0, 0}, 0.0}, g), NonPositiveGamma);
}
