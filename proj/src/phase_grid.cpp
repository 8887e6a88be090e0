// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#include "marle/phase_grid.hpp"

#include <atomic>
#include <cmath>
#include <string>

#include "marle/errors.hpp"
#include "marle/gauss.hpp"
#include "marle/pairwise.hpp"

namespace marle {
namespace {

std::atomic<std::uint64_t> g_next_grid_id{1};

// Internal-energy rule on s = I/mc^2 in (0, s_max]: a Gauss-Jacobi head on
// [0, s0] absorbing s^sigma exactly, plus a scaled Gauss-Laguerre tail on
// [s0, ~s_max] with the weight e^{+z} divided back out, so the combined rule
// integrates s^sigma * (smooth decaying) with the phi factor in the weights.
// The head keeps steep integrands e^{-a s}, a >> 1, resolved; the tail keeps
// the a ~ 1 family spectrally accurate.
void build_energy_rule(int n, double sigma, double s_max,
                       std::vector<double>& s, std::vector<double>& w) {
  const double s0 = std::min(std::max(s_max / 36.0, 1.2), 1.6);
  const int n_head = std::max(6, static_cast<int>(std::lround(0.42 * n)));
  const int n_tail = n - n_head;

  s.clear();
  w.clear();
  s.reserve(static_cast<std::size_t>(n));
  w.reserve(static_cast<std::size_t>(n));

  GaussRule head = gauss_jacobi01(n_head, sigma);
  const double head_scale = std::pow(s0, sigma + 1.0);
  for (std::size_t i = 0; i < head.x.size(); ++i) {
    s.push_back(head.x[i] * s0);
    w.push_back(head.w[i] * head_scale);
  }

  GaussRule tail = gauss_laguerre(n_tail);
  const double b = std::max(0.8, tail.x.back() / (s_max - s0));
  for (std::size_t i = 0; i < tail.x.size(); ++i) {
    const double z = tail.x[i];
    const double sv = s0 + z / b;
    s.push_back(sv);
    // W = w e^{+z} s^sigma / b, via logs to dodge overflow at large z
    const double logw = std::log(tail.w[i]) + z - std::log(b) +
                        sigma * std::log(sv);
    w.push_back(std::exp(logw));
  }
}

}  // namespace

PhaseGrid::PhaseGrid(const GridConfig& cfg, const Constants& consts)
    : cfg_(cfg), consts_(consts) {
  consts_.validate();
  if (cfg_.n_p < 8 || cfg_.n_p % 2 != 0)
    throw InvalidGridConfig("GridConfig: n_p must be even and >= 8");
  if (cfg_.n_I < 4) throw InvalidGridConfig("GridConfig: n_I must be >= 4");
  if (!(cfg_.gamma_min > 0.0))
    throw InvalidGridConfig("GridConfig: gamma_min must be positive");
  if (cfg_.p_max <= 0.0)
    cfg_.p_max = (8.0 / cfg_.gamma_min + 8.0) * consts_.mc();
  if (cfg_.s_max <= 0.0) cfg_.s_max = 40.0 / cfg_.gamma_min + 40.0;
  if (!(cfg_.p_max > 0.0) || !std::isfinite(cfg_.p_max))
    throw InvalidGridConfig("GridConfig: p_max must be positive");
  if (!(cfg_.s_max > 4.0) || !std::isfinite(cfg_.s_max))
    throw InvalidGridConfig("GridConfig: s_max must exceed 4");
  if (!(cfg_.check_tol > 0.0))
    throw InvalidGridConfig("GridConfig: check_tol must be positive");

  // Momentum axis: midpoint nodes, symmetric about 0 for even n_p.
  const int np = cfg_.n_p;
  const double h = 2.0 * cfg_.p_max / np;
  axis_.resize(static_cast<std::size_t>(np));
  for (int k = 0; k < np; ++k) axis_[static_cast<std::size_t>(k)] = -cfg_.p_max + (k + 0.5) * h;
  p_weight_ = h * h * h;

  const std::size_t n3 = static_cast<std::size_t>(np) * np * np;
  px_.resize(n3);
  py_.resize(n3);
  pz_.resize(n3);
  p0_.resize(n3);
  const double mc2 = consts_.mc() * consts_.mc();
  std::size_t idx = 0;
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j)
      for (int k = 0; k < np; ++k, ++idx) {
        const double x = axis_[static_cast<std::size_t>(i)];
        const double y = axis_[static_cast<std::size_t>(j)];
        const double z = axis_[static_cast<std::size_t>(k)];
        px_[idx] = x;
        py_[idx] = y;
        pz_[idx] = z;
        p0_[idx] = std::sqrt(mc2 + x * x + y * y + z * z);
      }

  // Internal-energy rule on s = I/mc^2, phi absorbed.
  std::vector<double> s, w;
  build_energy_rule(cfg_.n_I, consts_.sigma, cfg_.s_max, s, w);
  const double e_unit = consts_.mc2();
  const double e_scale = std::pow(e_unit, consts_.sigma + 1.0);
  I_nodes_.resize(s.size());
  I_weights_.resize(s.size());
  one_plus_s_.resize(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    I_nodes_[j] = s[j] * e_unit;
    I_weights_[j] = w[j] * e_scale;
    one_plus_s_[j] = 1.0 + s[j];
  }

  // Absorbed-phi exactness check: sum w e^{-s} must reproduce
  // Gamma(sigma+1) (mc^2)^{sigma+1}.
  PairwiseAccumulator acc;
  for (std::size_t j = 0; j < s.size(); ++j)
    acc.push(I_weights_[j] * std::exp(-s[j]));
  const double got = acc.total();
  const double want = std::tgamma(consts_.sigma + 1.0) * e_scale;
  phi_check_error_ = std::abs(got - want) / want;
  if (phi_check_error_ > cfg_.check_tol)
    throw InvalidGridConfig(
        "PhaseGrid: absorbed-phi check failed (rel err " +
        std::to_string(phi_check_error_) + " > tol " +
        std::to_string(cfg_.check_tol) + "); increase n_I");

  id_ = g_next_grid_id.fetch_add(1);
}

GridPtr build_phase_grid(const GridConfig& cfg, const Constants& consts) {
  return std::make_shared<const PhaseGrid>(cfg, consts);
}

}  // namespace marle
