// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MARLE_LORENTZ_HPP
#define MARLE_LORENTZ_HPP

#include <array>

#include "marle/constants.hpp"
#include "marle/four_vector.hpp"

namespace marle {

using Mat4 = std::array<std::array<double, 4>, 4>;

/// Pure Lorentz boost mapping a four-velocity U^mu to the rest frame
/// (c, 0, 0, 0).  The inverse is cached as g Lambda^T g, which is exact for
/// any matrix satisfying Lambda^T g Lambda = g.
class LorentzBoost {
 public:
  static LorentzBoost from_four_velocity(const FourVector& U,
                                         const Constants& k);

  FourVector apply(const FourVector& x) const { return mul(lambda_, x); }
  FourVector apply_inverse(const FourVector& x) const {
    return mul(inverse_, x);
  }

  const Mat4& matrix() const { return lambda_; }
  const Mat4& inverse_matrix() const { return inverse_; }

 private:
  static FourVector mul(const Mat4& A, const FourVector& x) {
    FourVector y;
    for (int i = 0; i < 4; ++i)
      y[i] = A[i][0] * x[0] + A[i][1] * x[1] + A[i][2] * x[2] + A[i][3] * x[3];
    return y;
  }

  Mat4 lambda_{};
  Mat4 inverse_{};
};

inline LorentzBoost boost_from_velocity(const FourVector& U,
                                        const Constants& k) {
  return LorentzBoost::from_four_velocity(U, k);
}

inline FourVector apply_boost(const LorentzBoost& b, const FourVector& x) {
  return b.apply(x);
}

inline FourVector apply_inverse_boost(const LorentzBoost& b,
                                      const FourVector& x) {
  return b.apply_inverse(x);
}

}  // namespace marle

#endif  // MARLE_LORENTZ_HPP
