// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MARLE_CONSTANTS_HPP
#define MARLE_CONSTANTS_HPP

#include <cmath>

#include "marle/errors.hpp"

namespace marle {

/// Physical parameters shared by every formula in the toolkit.
///
/// sigma is the exponent of the internal-state density phi(I) = I^sigma and
/// must exceed -1; tau is the relaxation time measured in the local rest
/// frame. The shipped default is the nondimensional preset c = m = k_B =
/// tau = 1, but all formulas keep the constants symbolic.
struct Constants {
  double c   = 1.0;  ///< speed of light, > 0
  double m   = 1.0;  ///< particle rest mass, > 0
  double k_B = 1.0;  ///< Boltzmann constant, > 0
  double tau = 1.0;  ///< relaxation time, > 0
  double sigma = 0.0;  ///< state-density exponent, > -1

  /// Nondimensional preset (c = m = k_B = tau = 1).
  static Constants natural(double sigma_value = 0.0) {
    Constants k;
    k.sigma = sigma_value;
    k.validate();
    return k;
  }

  void validate() const {
    if (!(std::isfinite(c) && std::isfinite(m) && std::isfinite(k_B) &&
          std::isfinite(tau) && std::isfinite(sigma)))
      throw NonFiniteInput("Constants: non-finite field");
    if (!(c > 0.0)) throw InvalidArgument("Constants: c must be positive");
    if (!(m > 0.0)) throw InvalidArgument("Constants: m must be positive");
    if (!(k_B > 0.0)) throw InvalidArgument("Constants: k_B must be positive");
    if (!(tau > 0.0)) throw InvalidArgument("Constants: tau must be positive");
    if (!(sigma > -1.0))
      throw InvalidArgument("Constants: sigma must exceed -1");
  }

  double mc() const { return m * c; }
  double mc2() const { return m * c * c; }
};

/// State density phi(I) = I^sigma.  The convention 0^0 = 1 applies for
/// sigma = 0; quadrature grids never request I = 0 for sigma < 0.
inline double state_density(double I, double sigma) {
  if (!(I >= 0.0)) throw NegativeInternalEnergy("state_density: I < 0");
  if (sigma == 0.0) return 1.0;
  return std::pow(I, sigma);
}

}  // namespace marle

#endif  // MARLE_CONSTANTS_HPP
