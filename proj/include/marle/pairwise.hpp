// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MARLE_PAIRWISE_HPP
#define MARLE_PAIRWISE_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace marle {

namespace detail {
inline double pairwise_recurse(const double* v, std::size_t n) {
  if (n <= 32) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_recurse(v, h) + pairwise_recurse(v + h, n - h);
}
}  // namespace detail

/// Pairwise (tree) sum of a contiguous range.  The association order depends
/// only on the length, so results are reproducible bit-for-bit.
inline double pairwise_sum(std::span<const double> v) {
  return detail::pairwise_recurse(v.data(), v.size());
}

/// Streaming pairwise accumulator over values produced index-by-index.
/// Values are buffered in fixed chunks of 4096 and combined pairwise, so the
/// grouping is a pure function of the value count: any parallel split along
/// chunk boundaries reproduces the same result.
class PairwiseAccumulator {
 public:
  static constexpr std::size_t kChunk = 4096;

  void push(double x) {
    buf_[fill_++] = x;
    if (fill_ == kChunk) flush();
  }

  double total() {
    if (fill_ > 0) flush();
    return detail::pairwise_recurse(partials_.data(), partials_.size());
  }

 private:
  void flush() {
    partials_.push_back(detail::pairwise_recurse(buf_.data(), fill_));
    fill_ = 0;
  }

  std::vector<double> partials_;
  std::array<double, kChunk> buf_{};
  std::size_t fill_ = 0;
};

}  // namespace marle

#endif  // MARLE_PAIRWISE_HPP
