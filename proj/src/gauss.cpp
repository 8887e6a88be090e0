// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#include "marle/gauss.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace marle {
namespace {

// Three-term recurrence of the monic orthogonal polynomials for a weight:
//   pi_{k+1}(x) = (x - a_k) pi_k(x) - b_k pi_{k-1}(x),   b_0 = mu_0.
// Nodes are found by interlacing bisection on the orthonormal polynomials
// (roots of p_m strictly interlace those of p_{m+1}), weights from the
// Christoffel function w_i = 1 / sum_{k<n} p_k(x_i)^2.  This avoids any
// eigen-solver dependency and is exact to rounding for n <= ~128.
struct Recurrence {
  std::vector<double> a;    // diagonal, size n
  std::vector<double> sqb;  // sqrt(b_k), size n+1, sqb[0] unused
  double mu0 = 0.0;
  double lo = 0.0, hi = 0.0;  // support bracket containing all roots
};

// Evaluates the orthonormal p_m(x); requires m <= n.
double ortho_eval(const Recurrence& r, int m, double x) {
  double pkm1 = 0.0;
  double pk = 1.0 / std::sqrt(r.mu0);
  for (int k = 0; k < m; ++k) {
    const double pkp1 = ((x - r.a[static_cast<std::size_t>(k)]) * pk -
                         (k > 0 ? r.sqb[static_cast<std::size_t>(k)] * pkm1
                                : 0.0)) /
                        r.sqb[static_cast<std::size_t>(k + 1)];
    pkm1 = pk;
    pk = pkp1;
  }
  return pk;
}

GaussRule rule_from_recurrence(const Recurrence& r, int n) {
  std::vector<double> roots;
  std::vector<double> prev;
  for (int m = 1; m <= n; ++m) {
    std::vector<double> brackets;
    brackets.push_back(r.lo);
    brackets.insert(brackets.end(), prev.begin(), prev.end());
    brackets.push_back(r.hi);
    std::vector<double> cur(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      double x0 = brackets[static_cast<std::size_t>(i)];
      double x1 = brackets[static_cast<std::size_t>(i) + 1];
      double f0 = ortho_eval(r, m, x0);
      for (int it = 0; it < 200; ++it) {
        const double xm = 0.5 * (x0 + x1);
        if (xm == x0 || xm == x1) break;
        const double fm = ortho_eval(r, m, xm);
        if ((f0 < 0.0) == (fm < 0.0)) {
          x0 = xm;
          f0 = fm;
        } else {
          x1 = xm;
        }
      }
      cur[static_cast<std::size_t>(i)] = 0.5 * (x0 + x1);
    }
    prev = std::move(cur);
  }
  roots = std::move(prev);

  GaussRule g;
  g.x = roots;
  g.w.resize(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    double pkm1 = 0.0;
    double pk = 1.0 / std::sqrt(r.mu0);
    double s = pk * pk;
    for (int k = 0; k < n - 1; ++k) {
      const double pkp1 =
          ((roots[i] - r.a[static_cast<std::size_t>(k)]) * pk -
           (k > 0 ? r.sqb[static_cast<std::size_t>(k)] * pkm1 : 0.0)) /
          r.sqb[static_cast<std::size_t>(k + 1)];
      pkm1 = pk;
      pk = pkp1;
      s += pk * pk;
    }
    g.w[i] = 1.0 / s;
  }
  return g;
}

Recurrence jacobi_recurrence(int n, double alpha, double beta) {
  Recurrence r;
  r.lo = -1.0;
  r.hi = 1.0;
  r.mu0 = std::pow(2.0, alpha + beta + 1.0) *
          std::exp(std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                   std::lgamma(alpha + beta + 2.0));
  r.a.resize(static_cast<std::size_t>(n));
  std::vector<double> b(static_cast<std::size_t>(n) + 1);
  b[0] = r.mu0;
  r.a[0] = (beta - alpha) / (alpha + beta + 2.0);
  for (int k = 1; k <= n; ++k) {
    const double d = 2.0 * k + alpha + beta;
    if (k < n)
      r.a[static_cast<std::size_t>(k)] =
          (beta * beta - alpha * alpha) / (d * (d + 2.0));
    if (k == 1)
      b[1] = 4.0 * (1.0 + alpha) * (1.0 + beta) /
             ((2.0 + alpha + beta) * (2.0 + alpha + beta) *
              (3.0 + alpha + beta));
    else
      b[static_cast<std::size_t>(k)] =
          4.0 * k * (k + alpha) * (k + beta) * (k + alpha + beta) /
          (d * d * (d + 1.0) * (d - 1.0));
  }
  r.sqb.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k)
    r.sqb[static_cast<std::size_t>(k)] =
        std::sqrt(b[static_cast<std::size_t>(k)]);
  return r;
}

}  // namespace

GaussRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n < 1");
  return rule_from_recurrence(jacobi_recurrence(n, 0.0, 0.0), n);
}

GaussRule gauss_jacobi01(int n, double sigma) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi01: n < 1");
  if (!(sigma > -1.0)) throw std::invalid_argument("gauss_jacobi01: sigma");
  // weight (1+x)^sigma on [-1,1]; map to [0,1] with s = (1+x)/2:
  //   int_0^1 g(s) s^sigma ds = 2^{-sigma-1} int_{-1}^1 g((1+x)/2)(1+x)^sigma dx
  GaussRule g = rule_from_recurrence(jacobi_recurrence(n, 0.0, sigma), n);
  const double scale = std::pow(2.0, -sigma - 1.0);
  for (std::size_t i = 0; i < g.x.size(); ++i) {
    g.x[i] = 0.5 * (g.x[i] + 1.0);
    g.w[i] *= scale;
  }
  return g;
}

GaussRule gauss_laguerre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre: n < 1");
  Recurrence r;
  r.lo = 0.0;
  r.hi = 4.0 * n + 2.0;  // upper bound for the largest Laguerre root
  r.mu0 = 1.0;
  r.a.resize(static_cast<std::size_t>(n));
  r.sqb.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k < n; ++k) r.a[static_cast<std::size_t>(k)] = 2.0 * k + 1.0;
  for (int k = 1; k <= n; ++k) r.sqb[static_cast<std::size_t>(k)] = k;
  return rule_from_recurrence(r, n);
}

}  // namespace marle
