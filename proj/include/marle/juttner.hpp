// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MARLE_JUTTNER_HPP
#define MARLE_JUTTNER_HPP

#include <array>

#include "marle/distribution.hpp"
#include "marle/moments.hpp"
#include "marle/radial.hpp"

namespace marle {

/// The triple (n, U, gamma) parameterizing the polyatomic Juttner
/// distribution; u is the spatial part of the four-velocity, gamma the
/// coldness mc^2/(k_B T).
struct EquilibriumParams {
  double n = 1.0;
  std::array<double, 3> u{0.0, 0.0, 0.0};
  double gamma = 1.0;

  void validate(const Constants& k) const;
};

/// Samples f_E = (n/M(gamma)) exp(-(1 + I/mc^2)(gamma/mc^2) U.p) on the
/// grid.  Internally the normalizer's e^{-gamma} is folded into the
/// exponent, so the evaluation stays finite for arbitrarily cold gamma.
Distribution juttner_eval(const EquilibriumParams& params, const GridPtr& grid,
                          double tol_radial = 1e-10);

/// Recovers the unique equilibrium parameters of f: n and U from the Eckart
/// decomposition of the discrete particle flux, gamma from the scalar moment
/// ratio.  Throws NonTimelikeFlux / RatioOutOfRange on degenerate input.
EquilibriumParams equilibrium_from_f(const Distribution& f,
                                     const GammaSolveOptions& opt = {});

/// Like equilibrium_from_f, then corrects the parameters so the *discrete*
/// moments of the sampled Juttner match those of f (the analytic solve
/// matches them only up to the grid's quadrature defect).  Each iteration
/// samples one Juttner, measures its discrete-vs-analytic moment defect and
/// re-solves from defect-corrected targets; two iterations reach the
/// round-off floor.  Conservative transport steps rely on this: with it, a
/// sampled Juttner is an exact fixed point of the collision step.
EquilibriumParams equilibrium_from_f_matched(const Distribution& f,
                                             int iterations = 2,
                                             const GammaSolveOptions& opt = {});

/// Discrete residuals of the two defining moment identities, normalized by
/// the magnitude of f's corresponding moment:
///   r_scalar : scalar identity (the S moments must match)
///   r_V      : vector identity (the V^mu moments must match)
struct MatchResiduals {
  double r_scalar = 0.0;
  FourVector r_V;
};

MatchResiduals moment_match_residuals(const Distribution& f,
                                      const Distribution& fe);

}  // namespace marle

#endif  // MARLE_JUTTNER_HPP
