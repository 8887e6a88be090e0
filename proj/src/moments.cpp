// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#include "marle/moments.hpp"

#include <cmath>

namespace marle {

MomentSet compute_moments(const Distribution& f) {
  const PhaseGrid& g = f.grid();
  const Constants& k = g.constants();
  const std::size_t np = g.n_pnodes();
  const std::size_t ni = g.n_inodes();
  std::span<const double> iw = g.I_weights();
  std::span<const double> In = g.I_nodes();
  std::span<const double> ops = g.one_plus_s();
  std::span<const double> px = g.px(), py = g.py(), pz = g.pz(), p0 = g.p0();
  std::span<const double> v = f.values();
  const double pw = g.p_weight();
  const double mc = k.mc();
  const double mc2 = k.mc2();

  // 19 streams: V(4), T upper triangle(10), h(4), S(1)
  PairwiseAccumulator acc[19];

  for (std::size_t ip = 0; ip < np; ++ip) {
    const double* row = v.data() + ip * ni;
    double A = 0.0, B = 0.0, C = 0.0, D = 0.0;
    for (std::size_t j = 0; j < ni; ++j) {
      const double fw = row[j] * iw[j];
      A += fw;
      B += fw * (mc2 + In[j]);
      C += fw / ops[j];
      D += (row[j] > 0.0 ? row[j] * std::log(row[j]) : 0.0) * iw[j];
    }
    const double r = pw / p0[ip];
    const double p[4] = {p0[ip], px[ip], py[ip], pz[ip]};
    for (int mu = 0; mu < 4; ++mu) {
      acc[mu].push(mc * p[mu] * A * r);
      acc[14 + mu].push(-k.k_B * k.c * p[mu] * D * r);
    }
    int t = 4;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu; nu < 4; ++nu, ++t)
        acc[t].push(p[mu] * p[nu] * B * r / mc);
    acc[18].push(C * r);
  }

  MomentSet ms;
  for (int mu = 0; mu < 4; ++mu) {
    ms.V[mu] = acc[mu].total();
    ms.h[mu] = acc[14 + mu].total();
  }
  int t = 4;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu; nu < 4; ++nu, ++t) {
      const double val = acc[t].total();
      ms.T[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] = val;
      ms.T[static_cast<std::size_t>(nu)][static_cast<std::size_t>(mu)] = val;
    }
  ms.S = acc[18].total();
  return ms;
}

double number_moment(const Distribution& f) {
  return reduce_pI(f, [](std::size_t, std::size_t) { return 1.0; });
}

EckartFrame eckart_decompose(const MomentSet& ms, const Constants& k) {
  const double vv = minkowski_dot(ms.V, ms.V);
  if (!(ms.V[0] > 0.0))
    throw NegativeTimeComponent("eckart_decompose: V^0 <= 0");
  if (!(vv > 0.0))
    throw NonTimelikeFlux(
        "eckart_decompose: discrete particle flux is not timelike "
        "(under-resolved or truncated distribution)");
  EckartFrame ef;
  ef.n = std::sqrt(vv) / k.mc();
  const double inv = 1.0 / (k.m * ef.n);
  ef.U = ms.V * inv;
  return ef;
}

double scalar_moment_ratio(const MomentSet& ms, const EckartFrame& ef) {
  if (!(ef.n > 0.0)) throw InvalidArgument("scalar_moment_ratio: n_f <= 0");
  return ms.S / ef.n;
}

}  // namespace marle
