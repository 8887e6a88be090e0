// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0
//
// Test-only reference implementations, independent of the library's
// numerical paths.  Nothing here may include library quadrature headers.

#ifndef MARLE_TESTS_ORACLES_HPP
#define MARLE_TESTS_ORACLES_HPP

#include <functional>

namespace oracles {

/// Modified Bessel function K1 via the ascending series (x < 8) and the
/// large-argument asymptotic expansion (x >= 8).  Good to ~1e-9 relative
/// over [0.1, 50], far below what it is used to certify.
double bessel_k1(double x);

/// Modified Bessel function I1 by its ascending series (used by K1).
double bessel_i1_series(double x);

/// Recursive adaptive Simpson integration to abs/rel tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int depth = 60);

/// Brute-force Mtilde(gamma)/M(gamma) for sigma = 0 by nested adaptive
/// Simpson over (r, u); independent of the library's radial machinery.
double ratio_bruteforce_sigma0(double gamma, double tol = 1e-10);

}  // namespace oracles

#endif  // MARLE_TESTS_ORACLES_HPP
