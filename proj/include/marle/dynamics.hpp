// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MARLE_DYNAMICS_HPP
#define MARLE_DYNAMICS_HPP

#include <optional>
#include <vector>

#include "marle/juttner.hpp"

namespace marle {

/// Per-node collision frequency nu = c m / (tau (1 + I/mc^2) p^0), written
/// into `out` (same layout as Distribution values).
void collision_frequency(const PhaseGrid& g, std::vector<double>& out);

/// Largest collision frequency on the grid (sets the RK4 stability bound).
double max_collision_frequency(const PhaseGrid& g);

/// Q(f) = nu (f_E - f), nodewise, for a supplied equilibrium.
Distribution collision_rate(const Distribution& f, const Distribution& fe);

/// Homogeneous relaxation with the equilibrium frozen at t = 0:
/// f(t) = f_E + (f - f_E) e^{-nu t}.  `relax_exact` solves for f_E itself.
Distribution relax_exact(const Distribution& f0, double t,
                         const GammaSolveOptions& opt = {});
Distribution relax_exact_with(const Distribution& f0, const Distribution& fe,
                              double t);

struct Rk4Options {
  double dt = 0.0;
  int nsteps = 0;
  bool refreeze = false;  ///< re-solve f_E from the current f each step
  /// Re-solve f_E at every RK stage instead of once per step.  This makes
  /// the scheme a classical RK4 discretization of the full nonlinear
  /// relaxation, whose exact flow conserves the collision invariants; use it
  /// when conservation over long windows matters more than cost.
  bool refreeze_stages = false;
  GammaSolveOptions solve;
};

struct Rk4Result {
  Distribution f;
  bool stiffness_warning = false;  ///< dt * nu_max exceeded 2.8
  double max_nu_dt = 0.0;
  double gamma_final = 0.0;  ///< last equilibrium gamma (refreeze chains)
};

/// Classical RK4 on df/dt = Q(f).  With refreeze off, f_E stays the t = 0
/// equilibrium (the linear problem relax_exact solves in closed form); with
/// refreeze on, equilibrium_from_f is re-solved once per step, which tracks
/// the model's conservation laws.
Rk4Result relax_rk4(const Distribution& f0, const Rk4Options& opt);

/// One frozen-equilibrium collision substep of length dt: recovers the
/// discretely matched equilibrium of f, then applies the exponential
/// relaxation nodewise in place.  gamma_hint (optional) warm-starts the
/// solve and receives the recovered gamma.  This is exactly the collision
/// half of SlabState::step, exposed so homogeneous references reproduce the
/// transport arithmetic verbatim.
void collision_substep(Distribution& f, double dt, double* gamma_hint = nullptr,
                       const GammaSolveOptions& opt = {});

/// Periodic 1-D slab of distributions, x in [0, L), cell width dx = L/n.
class SlabState {
 public:
  SlabState(GridPtr grid, int ncells, double length);

  std::size_t ncells() const { return cells_.size(); }
  double dx() const { return dx_; }
  double length() const { return length_; }
  double time() const { return t_; }
  double mass_floored() const { return mass_floored_; }

  Distribution& cell(std::size_t i) { return cells_[i]; }
  const Distribution& cell(std::size_t i) const { return cells_[i]; }
  const GridPtr& grid_ptr() const { return grid_; }

  /// Strang step: half upwind advection, full per-cell collision with the
  /// cell's frozen equilibrium, half advection.  Requires c dt/dx <= 1.
  void step(double dt, const GammaSolveOptions& opt = {});

 private:
  void advect_half(double dt);

  GridPtr grid_;
  std::vector<Distribution> cells_;
  std::vector<double> scratch_;       // neighbor buffer for advection
  std::vector<double> decay_;         // e^{-nu dt} cache
  double decay_dt_ = -1.0;
  std::vector<double> nu_;
  std::vector<double> gamma_hint_;    // warm starts per cell
  double dx_ = 0.0, length_ = 0.0, t_ = 0.0;
  double mass_floored_ = 0.0;
};

/// One diagnostics row: conserved moments, entropy, and the discrete
/// residuals of the two defining identities.
struct DiagnosticsRecord {
  double t = 0.0;
  double N = 0.0;
  FourVector V;
  std::array<double, 4> T0{};  // T^{0 nu}
  double h0 = 0.0;
  double entropy_production = 0.0;
  double r_scalar = 0.0;
  FourVector r_V;
};

/// Diagnostics of a homogeneous state; solves the equilibrium internally
/// (or uses the one supplied).
DiagnosticsRecord diagnostics(const Distribution& f, double t = 0.0,
                              const GammaSolveOptions& opt = {});
DiagnosticsRecord diagnostics_with(const Distribution& f,
                                   const Distribution& fe, double t = 0.0);

/// Slab totals: moments are summed over cells weighted by dx; residuals and
/// entropy production are per-cell sums against per-cell equilibria.
DiagnosticsRecord diagnostics(const SlabState& slab,
                              const GammaSolveOptions& opt = {});

}  // namespace marle

#endif  // MARLE_DYNAMICS_HPP
