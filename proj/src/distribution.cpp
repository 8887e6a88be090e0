// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#include "marle/distribution.hpp"

namespace marle {

Distribution::Distribution(GridPtr grid) : grid_(std::move(grid)) {
  if (!grid_) throw InvalidArgument("Distribution: null grid");
  values_.assign(grid_->size(), 0.0);
}

double Distribution::floor_negative() {
  const std::size_t ni = grid_->n_inodes();
  std::span<const double> iw = grid_->I_weights();
  const double pw = grid_->p_weight();
  PairwiseAccumulator lost;
  bool any = false;
  for (std::size_t idx = 0; idx < values_.size(); ++idx) {
    if (values_[idx] < 0.0) {
      lost.push(-values_[idx] * iw[idx % ni] * pw);
      values_[idx] = 0.0;
      any = true;
    }
  }
  return any ? lost.total() : 0.0;
}

bool Distribution::any_positive() const {
  for (double x : values_)
    if (x > 0.0) return true;
  return false;
}

void require_same_grid(const Distribution& a, const Distribution& b) {
  if (a.grid().id() != b.grid().id())
    throw GridMismatch("distributions live on different grids");
}

}  // namespace marle
