// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MARLE_TESTS_COMMON_HPP
#define MARLE_TESTS_COMMON_HPP

#include "marle/juttner.hpp"
#include "marle/phase_grid.hpp"

namespace testutil {

inline marle::GridPtr make_grid(const marle::Constants& k, int np,
                                double p_max, int ni, double s_max,
                                double check_tol = 1e-8) {
  marle::GridConfig cfg;
  cfg.n_p = np;
  cfg.p_max = p_max;
  cfg.n_I = ni;
  cfg.s_max = s_max;
  cfg.check_tol = check_tol;
  return marle::build_phase_grid(cfg, k);
}

/// Reference grid for moment-level checks around gamma ~ 2..4 (measured
/// Juttner moment defects ~1e-6 at gamma = 3).
inline marle::GridPtr reference_grid(const marle::Constants& k) {
  return make_grid(k, 48, 10.0 * k.m * k.c, 32, 60.0);
}

/// Resolves the gamma = 2 / gamma = 8 mixture to residuals ~1e-7.
inline marle::GridPtr mixture_grid(const marle::Constants& k) {
  return make_grid(k, 64, 10.0 * k.m * k.c, 32, 60.0);
}

/// Cold-capable grid (gamma ~ 8..10, defects ~1e-5).
inline marle::GridPtr cold_grid(const marle::Constants& k) {
  return make_grid(k, 56, 8.8 * k.m * k.c, 32, 48.0);
}

/// Small, fast grid for smoke-level checks at gamma <= 3 (defects ~3e-4).
inline marle::GridPtr coarse_grid(const marle::Constants& k) {
  return make_grid(k, 28, 9.0 * k.m * k.c, 24, 60.0, 1e-6);
}

}  // namespace testutil

#endif  // MARLE_TESTS_COMMON_HPP
