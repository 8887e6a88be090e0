// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MARLE_PHASE_GRID_HPP
#define MARLE_PHASE_GRID_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "marle/constants.hpp"

namespace marle {

/// Discretization parameters for the momentum x internal-energy phase space.
///
/// p_max <= 0 or s_max <= 0 select the cutoff rules
///   p_max = (8/gamma_min + 8) mc,   s_max = 40/gamma_min + 40,
/// sized so Juttner tails at gamma >= gamma_min stay below the weight floor.
struct GridConfig {
  int n_p = 32;          ///< momentum nodes per axis, even, >= 8
  double p_max = 0.0;    ///< momentum cutoff; <= 0 means use the rule
  int n_I = 32;          ///< internal-energy nodes, >= 4
  double s_max = 0.0;    ///< energy cutoff in units of mc^2; <= 0 means rule
  double gamma_min = 0.5;
  double check_tol = 1e-8;  ///< build-time phi-exactness tolerance
};

/// Immutable discrete phase space: a uniform Cartesian midpoint grid over
/// [-p_max, p_max]^3 tensored with an internal-energy rule whose weights
/// absorb the state density phi(I) = I^sigma, so that
///   sum_j g(I_j) I_weight_j  ~  int_0^inf g(I) I^sigma dI
/// for smooth decaying g.  Build fails if the absorbed-phi check
///   sum_j I_weight_j e^{-I_j/mc^2} = Gamma(sigma+1) (mc^2)^{sigma+1}
/// misses the configured tolerance.
class PhaseGrid {
 public:
  PhaseGrid(const GridConfig& cfg, const Constants& consts);

  std::size_t n_pnodes() const { return px_.size(); }
  std::size_t n_inodes() const { return I_nodes_.size(); }
  std::size_t size() const { return n_pnodes() * n_inodes(); }

  std::span<const double> px() const { return px_; }
  std::span<const double> py() const { return py_; }
  std::span<const double> pz() const { return pz_; }
  std::span<const double> p0() const { return p0_; }
  double p_weight() const { return p_weight_; }  // uniform midpoint cell h^3

  std::span<const double> I_nodes() const { return I_nodes_; }
  std::span<const double> I_weights() const { return I_weights_; }

  /// 1 + I_j/(mc^2), cached once per grid; this is the head factor of the
  /// collision frequency and of the scalar moment.
  std::span<const double> one_plus_s() const { return one_plus_s_; }

  std::span<const double> axis() const { return axis_; }

  const Constants& constants() const { return consts_; }
  const GridConfig& config() const { return cfg_; }
  double phi_check_error() const { return phi_check_error_; }

  std::uint64_t id() const { return id_; }

 private:
  GridConfig cfg_;
  Constants consts_;
  std::vector<double> axis_;
  std::vector<double> px_, py_, pz_, p0_;
  double p_weight_ = 0.0;
  std::vector<double> I_nodes_, I_weights_, one_plus_s_;
  double phi_check_error_ = 0.0;
  std::uint64_t id_ = 0;
};

using GridPtr = std::shared_ptr<const PhaseGrid>;

GridPtr build_phase_grid(const GridConfig& cfg, const Constants& consts);

}  // namespace marle

#endif  // MARLE_PHASE_GRID_HPP
