// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#include "marle/lorentz.hpp"

#include <cmath>

#include "marle/errors.hpp"

namespace marle {

// Boost matrix for U^mu = (U^0, u):
//
//   Lambda^0_0 = U^0/c,  Lambda^0_i = Lambda^i_0 = -u_i/c,
//   Lambda^i_j = delta_ij + u_i u_j / (c (U^0 + c)).
//
// The spatial term uses (U^0/c - 1)/|u|^2 = 1/(c (U^0 + c)), which removes
// the 0/0 at u = 0 algebraically, so the rest-frame limit is the identity
// without a branch.
LorentzBoost LorentzBoost::from_four_velocity(const FourVector& U,
                                              const Constants& k) {
  if (!U.finite()) throw NonFiniteInput("boost_from_velocity: non-finite U");
  const double c = k.c;
  if (!(U[0] > 0.0))
    throw NonFiniteInput("boost_from_velocity: U^0 must be positive");

  LorentzBoost b;
  Mat4& L = b.lambda_;
  const double q = 1.0 / (c * (U[0] + c));

  L[0][0] = U[0] / c;
  for (int i = 0; i < 3; ++i) {
    L[0][i + 1] = -U[i + 1] / c;
    L[i + 1][0] = -U[i + 1] / c;
    for (int j = 0; j < 3; ++j)
      L[i + 1][j + 1] = (i == j ? 1.0 : 0.0) + U[i + 1] * U[j + 1] * q;
  }

  // inverse = g Lambda^T g: flips the sign of the mixed time-space entries.
  Mat4& Li = b.inverse_;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double gi = (i == 0) ? 1.0 : -1.0;
      const double gj = (j == 0) ? 1.0 : -1.0;
      Li[i][j] = gi * gj * L[j][i];
    }
  return b;
}

}  // namespace marle
