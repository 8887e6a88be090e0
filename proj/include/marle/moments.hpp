// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MARLE_MOMENTS_HPP
#define MARLE_MOMENTS_HPP

#include "marle/distribution.hpp"
#include "marle/four_vector.hpp"
#include "marle/lorentz.hpp"

namespace marle {

/// Macroscopic moments of a distribution:
///   V^mu  = mc    int p^mu f            phi dI dp / p^0
///   T^munu= 1/mc  int p^mu p^nu f (mc^2+I) phi dI dp / p^0
///   h^mu  = -k_B c int p^mu f ln f      phi dI dp / p^0   (f ln f := 0 at 0)
///   S     =       int f (1+I/mc^2)^-1   phi dI dp / p^0
/// T is exactly symmetric by construction.
struct MomentSet {
  FourVector V;
  Mat4 T{};
  FourVector h;
  double S = 0.0;
};

MomentSet compute_moments(const Distribution& f);

/// Particle number density moment N = int f phi dI dp = V^0 / (mc).
double number_moment(const Distribution& f);

/// Eckart frame: proper density and four-velocity with V^mu = m n_f U_f^mu.
struct EckartFrame {
  double n = 0.0;
  FourVector U;
};

/// n_f = sqrt(V.V)/(mc), U_f = V/(m n_f).  Throws NonTimelikeFlux when the
/// discrete flux is not timelike (under-resolved or truncated input) and
/// NegativeTimeComponent when V^0 <= 0.
EckartFrame eckart_decompose(const MomentSet& ms, const Constants& k);

/// Right side of the gamma relation: R = S/n_f, in (0, 1/(mc)) for resolved
/// grids.
double scalar_moment_ratio(const MomentSet& ms, const EckartFrame& ef);

}  // namespace marle

#endif  // MARLE_MOMENTS_HPP
