// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MARLE_DISTRIBUTION_HPP
#define MARLE_DISTRIBUTION_HPP

#include <span>
#include <vector>

#include "marle/errors.hpp"
#include "marle/pairwise.hpp"
#include "marle/phase_grid.hpp"

namespace marle {

/// Sample values f >= 0 on a PhaseGrid, flattened as value(ip, j) =
/// values[ip * n_inodes + j].
class Distribution {
 public:
  explicit Distribution(GridPtr grid);

  const PhaseGrid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  double& at(std::size_t ip, std::size_t j) {
    return values_[ip * grid_->n_inodes() + j];
  }
  double at(std::size_t ip, std::size_t j) const {
    return values_[ip * grid_->n_inodes() + j];
  }

  /// Clamps negative samples to zero; returns the phase-space mass removed
  /// (weighted, same measure as reduce_pI with w = 1) so callers can log it.
  double floor_negative();

  /// True if any sample is positive.
  bool any_positive() const;

 private:
  GridPtr grid_;
  std::vector<double> values_;
};

void require_same_grid(const Distribution& a, const Distribution& b);

/// Weighted phase-space reduction
///   sum_{ip,j} f(ip,j) w(ip,j) p_weight I_weight_j
/// accumulated in a fixed pairwise (tree) order, so the result is
/// reproducible for a fixed grid no matter how the loop is later split.
/// This is the kernel behind every moment integral.
template <class W>
double reduce_pI(const Distribution& f, W&& w) {
  const PhaseGrid& g = f.grid();
  const std::size_t np = g.n_pnodes();
  const std::size_t ni = g.n_inodes();
  std::span<const double> iw = g.I_weights();
  std::span<const double> v = f.values();
  const double pw = g.p_weight();

  PairwiseAccumulator acc;
  for (std::size_t ip = 0; ip < np; ++ip) {
    const double* row = v.data() + ip * ni;
    double inner = 0.0;
    for (std::size_t j = 0; j < ni; ++j)
      inner += row[j] * w(ip, j) * iw[j];
    acc.push(inner * pw);
  }
  return acc.total();
}

}  // namespace marle

#endif  // MARLE_DISTRIBUTION_HPP
