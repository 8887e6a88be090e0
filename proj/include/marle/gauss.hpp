// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MARLE_GAUSS_HPP
#define MARLE_GAUSS_HPP

#include <vector>

namespace marle {

/// Nodes and weights of an n-point Gauss rule.
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

/// Gauss-Legendre on [-1, 1].
GaussRule gauss_legendre(int n);

/// Gauss-Jacobi on [0, 1] with the weight s^sigma absorbed into the
/// weights: sum w_i g(x_i) ~ int_0^1 g(s) s^sigma ds, sigma > -1.
GaussRule gauss_jacobi01(int n, double sigma);

/// Gauss-Laguerre on [0, inf) with weight e^{-x}.
GaussRule gauss_laguerre(int n);

}  // namespace marle

#endif  // MARLE_GAUSS_HPP
