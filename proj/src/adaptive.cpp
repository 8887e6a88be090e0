// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#include "marle/adaptive.hpp"

#include <algorithm>
#include <cmath>

#include "marle/errors.hpp"

namespace marle {
namespace {

// Kronrod 15-point nodes (|x|, symmetric) and weights on [-1,1]; the G7
// weights sit under the odd-index Kronrod nodes.  Classical QUADPACK values.
constexpr std::array<double, 8> kKronrodX = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodW = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussW = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0, b = 0.0;
  std::vector<double> value;  // K15 estimate per component
  std::vector<double> err;    // 2|K15 - G7| per component
  double badness = 0.0;
};

Panel k15(const std::function<void(double, double*)>& f, int dim, double a,
          double b, std::vector<double>& scratch) {
  const std::size_t n = static_cast<std::size_t>(dim);
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  Panel p;
  p.a = a;
  p.b = b;
  p.value.assign(n, 0.0);
  p.err.assign(n, 0.0);
  std::vector<double> gauss(n, 0.0);
  scratch.resize(n);

  for (std::size_t j = 0; j < 8; ++j) {
    const int reps = (j == 7) ? 1 : 2;
    for (int s = 0; s < reps; ++s) {
      const double x = (s == 0) ? c - h * kKronrodX[j] : c + h * kKronrodX[j];
      f(x, scratch.data());
      for (std::size_t d = 0; d < n; ++d) {
        p.value[d] += kKronrodW[j] * scratch[d];
        if (j % 2 == 1) gauss[d] += kGaussW[j / 2] * scratch[d];
      }
    }
  }
  for (std::size_t d = 0; d < n; ++d) {
    p.value[d] *= h;
    p.err[d] = 2.0 * std::abs(p.value[d] - h * gauss[d]) + 1e-300;
    p.badness = std::max(p.badness, p.err[d]);
  }
  return p;
}

}  // namespace

AdaptiveResult integrate_adaptive(const std::function<void(double, double*)>& f,
                                  int dim, double a, double b, double rel_tol,
                                  double abs_tol,
                                  const std::vector<double>& breaks,
                                  int max_panels) {
  const std::size_t n = static_cast<std::size_t>(dim);
  std::vector<double> pts;
  pts.push_back(a);
  for (double x : breaks)
    if (x > a && x < b) pts.push_back(x);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());

  AdaptiveResult res;
  res.value.assign(n, 0.0);
  res.error.assign(n, 0.0);
  std::vector<double> scratch;
  std::vector<Panel> panels;
  panels.reserve(64);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    panels.push_back(k15(f, dim, pts[i], pts[i + 1], scratch));
    res.evaluations += 15;
  }

  while (true) {
    std::fill(res.value.begin(), res.value.end(), 0.0);
    std::fill(res.error.begin(), res.error.end(), 0.0);
    for (const Panel& p : panels)
      for (std::size_t d = 0; d < n; ++d) {
        res.value[d] += p.value[d];
        res.error[d] += p.err[d];
      }
    bool ok = true;
    for (std::size_t d = 0; d < n; ++d)
      if (res.error[d] > rel_tol * std::abs(res.value[d]) + abs_tol) ok = false;
    if (ok) return res;
    if (static_cast<int>(panels.size()) >= max_panels)
      throw ToleranceNotReached("integrate_adaptive: panel budget exhausted");

    std::size_t worst = 0;
    for (std::size_t i = 1; i < panels.size(); ++i)
      if (panels[i].badness > panels[worst].badness) worst = i;
    const double pa = panels[worst].a;
    const double pb = panels[worst].b;
    const double mid = 0.5 * (pa + pb);
    panels[worst] = k15(f, dim, pa, mid, scratch);
    panels.push_back(k15(f, dim, mid, pb, scratch));
    res.evaluations += 30;
  }
}

}  // namespace marle
