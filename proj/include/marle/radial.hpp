// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MARLE_RADIAL_HPP
#define MARLE_RADIAL_HPP

#include <cmath>

#include "marle/constants.hpp"

namespace marle {

/// The radial reductions of the Juttner normalizers at a given gamma:
///
///   M1 = int r^2/sqrt(1+r^2) e^{-(1+s)gamma sqrt(1+r^2)} (1+s)^-1 phi dI dr
///   M2 = int r^2            e^{-(1+s)gamma sqrt(1+r^2)}          phi dI dr
///   M3 = int r^2 sqrt(1+r^2) e^{-(1+s)gamma sqrt(1+r^2)} (1+s)   phi dI dr
///
/// with M = 4 pi (mc)^3 M2 and Mtilde = 4 pi (mc)^2 M1, and the derivative
/// identities Mtilde' = -4 pi (mc)^2 M2, M' = -4 pi (mc)^3 M3.
///
/// Stored values are scaled by e^{+gamma} (log_scale = -gamma) so the struct
/// stays finite for gamma ~ 1e4 and beyond; the unscaled accessors simply
/// apply exp(log_scale) and may underflow for extreme gamma.  Every ratio of
/// two integrals is scale-free.
struct RadialIntegrals {
  double gamma = 0.0;
  double m1_scaled = 0.0;  ///< e^{+gamma} M1 / (mc^2)^{sigma+1}
  double m2_scaled = 0.0;
  double m3_scaled = 0.0;
  double log_scale = 0.0;  ///< = -gamma
  double unit = 1.0;       ///< (mc^2)^{sigma+1}
  double mc = 1.0;

  double M1() const { return unit * std::exp(log_scale) * m1_scaled; }
  double M2() const { return unit * std::exp(log_scale) * m2_scaled; }
  double M3() const { return unit * std::exp(log_scale) * m3_scaled; }
  double M() const { return 4.0 * M_PI * mc * mc * mc * M2(); }
  double Mtilde() const { return 4.0 * M_PI * mc * mc * M1(); }

  /// Mtilde/M = M1/(mc M2); stable for any gamma.
  double ratio() const { return m1_scaled / (mc * m2_scaled); }
};

/// Evaluates the five radial integrals at gamma > 0 to relative tolerance
/// tol.  Results are memoized per (gamma, sigma, tol) behind a lock.
RadialIntegrals radial_integrals(double gamma, const Constants& k,
                                 double tol = 1e-10);

/// Mtilde(gamma)/M(gamma); strictly increasing in gamma with range
/// (0, 1/(mc)).
double ratio(double gamma, const Constants& k, double tol = 1e-10);

struct GammaSolveOptions {
  double tol_gamma = 1e-10;   ///< relative bracket width at convergence
  double tol_radial = 1e-10;  ///< tolerance for each ratio evaluation
  double hint = 0.0;          ///< optional warm start (ignored if <= 0)
};

/// Solves Mtilde(gamma)/M(gamma) = R for the unique root.  Requires
/// 0 < R < 1/(mc) (throws RatioOutOfRange otherwise).  Brackets start from
/// the analytic bounds ratio <= gamma/mc and
/// ratio >= sqrt(1 - (2 sigma + 5)/gamma)/mc, expand geometrically if
/// rounding spoils them, then bisect on log(gamma).
double solve_gamma(double R, const Constants& k,
                   const GammaSolveOptions& opt = {});

/// E(a, sigma) = int_0^inf t^sigma e^{-t} (1 + t/a)^{-1} dt, the inner
/// energy integral of M1 after u = 1 + I/mc^2 and t = a(u-1).  Exposed for
/// tests; cached fixed rules make the a >= 1.3 path a short dot product.
double inner_energy_integral(double a, double sigma);

}  // namespace marle

#endif  // MARLE_RADIAL_HPP
