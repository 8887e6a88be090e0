// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MARLE_FOUR_VECTOR_HPP
#define MARLE_FOUR_VECTOR_HPP

#include <array>
#include <cmath>

#include "marle/constants.hpp"
#include "marle/errors.hpp"

namespace marle {

/// Contravariant four-vector with metric signature (+,-,-,-).
struct FourVector {
  std::array<double, 4> v{0.0, 0.0, 0.0, 0.0};

  FourVector() = default;
  FourVector(double a0, double a1, double a2, double a3) : v{a0, a1, a2, a3} {}

  double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }

  FourVector operator+(const FourVector& o) const {
    return {v[0] + o.v[0], v[1] + o.v[1], v[2] + o.v[2], v[3] + o.v[3]};
  }
  FourVector operator-(const FourVector& o) const {
    return {v[0] - o.v[0], v[1] - o.v[1], v[2] - o.v[2], v[3] - o.v[3]};
  }
  FourVector operator*(double s) const {
    return {s * v[0], s * v[1], s * v[2], s * v[3]};
  }

  bool finite() const {
    return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]) &&
           std::isfinite(v[3]);
  }
};

/// p^mu q_mu = p^0 q^0 - sum_i p^i q^i.
inline double minkowski_dot(const FourVector& a, const FourVector& b) {
  return a.v[0] * b.v[0] - a.v[1] * b.v[1] - a.v[2] * b.v[2] - a.v[3] * b.v[3];
}

/// U^mu = (sqrt(c^2 + |u|^2), u); satisfies U.U = c^2 by construction.
inline FourVector four_velocity_from_spatial(const std::array<double, 3>& u,
                                             const Constants& k) {
  if (!(std::isfinite(u[0]) && std::isfinite(u[1]) && std::isfinite(u[2])))
    throw NonFiniteInput("four_velocity_from_spatial: non-finite u");
  const double u2 = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
  return {std::sqrt(k.c * k.c + u2), u[0], u[1], u[2]};
}

/// On-shell momentum (sqrt((mc)^2 + |p|^2), p); satisfies p.p = (mc)^2.
inline FourVector on_shell_momentum(const std::array<double, 3>& p,
                                    const Constants& k) {
  if (!(std::isfinite(p[0]) && std::isfinite(p[1]) && std::isfinite(p[2])))
    throw NonFiniteInput("on_shell_momentum: non-finite p");
  const double p2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
  const double mc = k.mc();
  return {std::sqrt(mc * mc + p2), p[0], p[1], p[2]};
}

}  // namespace marle

#endif  // MARLE_FOUR_VECTOR_HPP
