// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#include "marle/radial.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "marle/adaptive.hpp"
#include "marle/errors.hpp"
#include "marle/gauss.hpp"

namespace marle {
namespace {

// ---------------------------------------------------------------------------
// Inner energy integral E(a, sigma) = int_0^inf t^sigma e^{-t} (1+t/a)^{-1} dt
//
// For a >= kSwitchA the integrand's pole at t = -a is well separated from the
// support, so a fixed rule works for every a: a Gauss-Jacobi head on [0, 1.2]
// absorbing t^sigma, then GL-12 on ratio-2 panels out to t ~ 77, with
// t^sigma e^{-t} folded into the weights.  E(a) is then a dot product with
// (1 + t_i/a)^{-1} -- no exp at evaluation time.
//
// For small a the pole crowds the support; substituting t = a tau moves it to
// tau = -1 and the same head+panels construction in tau converges again.
// ---------------------------------------------------------------------------

constexpr double kSwitchA = 1.3;

class InnerRule {
 public:
  explicit InnerRule(double sigma) : sigma_(sigma) {
    const double head_end = 1.2;
    GaussRule head = gauss_jacobi01(24, sigma);
    const double hs = std::pow(head_end, sigma + 1.0);
    for (std::size_t i = 0; i < head.x.size(); ++i) {
      const double t = head.x[i] * head_end;
      t_.push_back(t);
      w_.push_back(head.w[i] * hs * std::exp(-t));
    }
    GaussRule gl = gauss_legendre(12);
    double lo = head_end;
    while (lo < 70.0) {
      const double hi = 2.0 * lo;
      for (std::size_t i = 0; i < gl.x.size(); ++i) {
        const double t = 0.5 * (lo + hi) + 0.5 * (hi - lo) * gl.x[i];
        t_.push_back(t);
        w_.push_back(0.5 * (hi - lo) * gl.w[i] * std::pow(t, sigma) *
                     std::exp(-t));
      }
      lo = hi;
    }
    tail_start_ = lo;
  }

  double eval(double a) const {
    double s = 0.0;
    for (std::size_t i = 0; i < t_.size(); ++i) s += w_[i] / (1.0 + t_[i] / a);
    // analytic tail bound for [T, inf): t^sigma e^{-t} <= T^sigma e^{-t} *
    // e^{sigma (t-T)/T}; half the bound is added as the remainder estimate.
    const double T = tail_start_;
    const double bound = std::pow(T, sigma_) * std::exp(-T) /
                         ((1.0 + T / a) * (1.0 - std::max(sigma_, 0.0) / T));
    return s + 0.5 * bound;
  }

  double sigma() const { return sigma_; }

 private:
  double sigma_;
  double tail_start_ = 0.0;
  std::vector<double> t_, w_;
};

const InnerRule& inner_rule_for(double sigma) {
  static std::mutex mu;
  static std::map<double, std::unique_ptr<InnerRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(sigma);
  if (it == cache.end())
    it = cache.emplace(sigma, std::make_unique<InnerRule>(sigma)).first;
  return *it->second;
}

double inner_small_a(double a, double sigma) {
  // E(a, sigma) = a^{sigma+1} int_0^inf tau^sigma e^{-a tau} (1+tau)^{-1} dtau
  static thread_local std::map<double, GaussRule> head_cache;
  auto it = head_cache.find(sigma);
  if (it == head_cache.end())
    it = head_cache.emplace(sigma, gauss_jacobi01(24, sigma)).first;
  const GaussRule& head = it->second;

  double s = 0.0;
  for (std::size_t i = 0; i < head.x.size(); ++i) {
    const double tau = head.x[i];
    s += head.w[i] * std::exp(-a * tau) / (1.0 + tau);
  }
  static const GaussRule gl = gauss_legendre(12);
  double lo = 1.0;
  const double tau_max = std::max(70.0, 75.0 / a);
  while (lo < tau_max) {
    const double hi = 2.0 * lo;
    for (std::size_t i = 0; i < gl.x.size(); ++i) {
      const double tau = 0.5 * (lo + hi) + 0.5 * (hi - lo) * gl.x[i];
      s += 0.5 * (hi - lo) * gl.w[i] * std::pow(tau, sigma) *
           std::exp(-a * tau) / (1.0 + tau);
    }
    lo = hi;
  }
  return std::pow(a, sigma + 1.0) * s;
}

// ---------------------------------------------------------------------------
// Outer radial integrals (scaled by e^{+gamma})
// ---------------------------------------------------------------------------

struct CoreTriple {
  double i1, i2, i3;  // e^{+gamma} M_k with mc^2 = 1
};

struct CacheKey {
  double gamma, sigma, tol;
  bool operator<(const CacheKey& o) const {
    if (gamma != o.gamma) return gamma < o.gamma;
    if (sigma != o.sigma) return sigma < o.sigma;
    return tol < o.tol;
  }
};

CoreTriple compute_core(double gamma, double sigma, double tol) {
  const InnerRule& inner = inner_rule_for(sigma);
  const double G = std::tgamma(sigma + 1.0);
  const double L = 45.0 + 3.0 * std::log1p(1.0 / gamma);
  const double w_max = 1.0 + L / gamma;  // sqrt(1+r^2) cutoff
  const double r_max = std::sqrt(w_max * w_max - 1.0);

  auto integrand = [&](double r, double* out) {
    const double w = std::sqrt(1.0 + r * r);
    const double a = gamma * w;
    const double decay = std::exp(-gamma * (w - 1.0));
    const double apow = std::pow(a, -(sigma + 1.0));
    const double base = r * r * decay * apow;
    const double E = (a >= kSwitchA) ? inner.eval(a) : inner_small_a(a, sigma);
    out[0] = base / w * E;                          // M1
    out[1] = base * G;                              // M2
    out[2] = base * w * G * (1.0 + (sigma + 1.0) / a);  // M3
  };

  std::vector<double> breaks;
  for (double k : {1.0, 4.0, 12.0, 28.0}) {
    const double wk = 1.0 + k / gamma;
    if (wk < w_max) breaks.push_back(std::sqrt(wk * wk - 1.0));
  }

  AdaptiveResult res =
      integrate_adaptive(integrand, 3, 0.0, r_max, tol, 1e-300, breaks);
  return {res.value[0], res.value[1], res.value[2]};
}

CoreTriple core_cached(double gamma, double sigma, double tol) {
  static std::mutex mu;
  static std::map<CacheKey, CoreTriple> cache;
  const CacheKey key{gamma, sigma, tol};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  CoreTriple t = compute_core(gamma, sigma, tol);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (cache.size() > 200000) cache.clear();
    cache.emplace(key, t);
  }
  return t;
}

}  // namespace

double inner_energy_integral(double a, double sigma) {
  if (!(a > 0.0)) throw InvalidArgument("inner_energy_integral: a <= 0");
  if (!(sigma > -1.0)) throw InvalidArgument("inner_energy_integral: sigma");
  return (a >= kSwitchA) ? inner_rule_for(sigma).eval(a)
                         : inner_small_a(a, sigma);
}

RadialIntegrals radial_integrals(double gamma, const Constants& k,
                                 double tol) {
  k.validate();
  if (!(gamma > 0.0))
    throw NonPositiveGamma("radial_integrals: gamma must be positive");
  if (!(tol > 0.0)) throw InvalidArgument("radial_integrals: tol <= 0");
  const CoreTriple t = core_cached(gamma, k.sigma, tol);
  RadialIntegrals out;
  out.gamma = gamma;
  out.m1_scaled = t.i1;
  out.m2_scaled = t.i2;
  out.m3_scaled = t.i3;
  out.log_scale = -gamma;
  out.unit = std::pow(k.mc2(), k.sigma + 1.0);
  out.mc = k.mc();
  return out;
}

double ratio(double gamma, const Constants& k, double tol) {
  return radial_integrals(gamma, k, tol).ratio();
}

double solve_gamma(double R, const Constants& k, const GammaSolveOptions& opt) {
  k.validate();
  const double mc = k.mc();
  if (!(R > 0.0) || !(R * mc < 1.0))
    throw RatioOutOfRange(
        "solve_gamma: moment ratio outside (0, 1/(mc)); the input "
        "distribution is under-resolved or truncated");

  const double x = R * mc;  // dimensionless target in (0,1)
  auto f = [&](double g) { return ratio(g, k, opt.tol_radial) * mc; };

  double lo, hi;
  if (opt.hint > 0.0) {
    lo = opt.hint / 1.05;
    hi = opt.hint * 1.05;
  } else {
    lo = std::max(x, 1e-280);                       // from ratio <= gamma/mc
    hi = (2.0 * k.sigma + 5.0) / (1.0 - x * x);     // from the lower bound
  }

  double flo = f(lo);
  double fhi = f(hi);
  int guard = 0;
  while (flo > x) {
    lo *= 0.5;
    flo = f(lo);
    if (++guard > 2000)
      throw BracketFailure("solve_gamma: no lower bracket found");
  }
  while (fhi < x) {
    hi *= 2.0;
    fhi = f(hi);
    if (++guard > 2000)
      throw BracketFailure("solve_gamma: no upper bracket found");
  }
  if (!(lo < hi)) throw BracketFailure("solve_gamma: degenerate bracket");

  // bisection on log(gamma): unconditionally convergent on the monotone map
  while (hi / lo - 1.0 > opt.tol_gamma) {
    const double mid = std::sqrt(lo * hi);
    if (mid <= lo || mid >= hi) break;  // ran out of representable points
    if (f(mid) < x)
      lo = mid;
    else
      hi = mid;
  }
  return std::sqrt(lo * hi);
}

}  // namespace marle
