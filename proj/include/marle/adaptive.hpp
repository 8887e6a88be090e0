// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MARLE_ADAPTIVE_HPP
#define MARLE_ADAPTIVE_HPP

#include <array>
#include <functional>
#include <vector>

namespace marle {

/// Result of a vector-valued adaptive integration.
struct AdaptiveResult {
  std::vector<double> value;
  std::vector<double> error;  // absolute error estimate per component
  int evaluations = 0;
};

/// Adaptive Gauss-Kronrod (G7, K15) over [a, b] for a vector integrand.
/// `f(x, out)` writes `dim` components.  Panels are bisected until every
/// component satisfies err <= rel_tol * |integral| + abs_tol, seeded with the
/// given initial break points (useful for integrands with a known scale
/// structure).  Throws ToleranceNotReached when the panel budget runs out.
AdaptiveResult integrate_adaptive(
    const std::function<void(double, double*)>& f, int dim, double a, double b,
    double rel_tol, double abs_tol, const std::vector<double>& breaks = {},
    int max_panels = 4000);

}  // namespace marle

#endif  // MARLE_ADAPTIVE_HPP
