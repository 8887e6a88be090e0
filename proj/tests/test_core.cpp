// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "marle/constants.hpp"
#include "marle/four_vector.hpp"
#include "marle/lorentz.hpp"

using namespace marle;

namespace {

// random four-velocity with coordinate speed up to 0.99c
FourVector random_four_velocity(std::mt19937_64& rng, const Constants& k,
                                double vmax_frac = 0.99) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::array<double, 3> dir{};
  double n2 = 0.0;
  do {
    for (auto& d : dir) d = uni(rng);
    n2 = dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2];
  } while (n2 > 1.0 || n2 < 1e-12);
  const double n = std::sqrt(n2);
  std::uniform_real_distribution<double> sp(0.0, vmax_frac);
  const double v = sp(rng) * k.c;                  // coordinate speed
  const double gamma_L = 1.0 / std::sqrt(1.0 - v * v / (k.c * k.c));
  const double umag = gamma_L * v;                 // |spatial part of U|
  return four_velocity_from_spatial(
      {umag * dir[0] / n, umag * dir[1] / n, umag * dir[2] / n}, k);
}

double mat_err_vs_metric(const Mat4& L) {
  // max_ij |(L^T g L - g)_ij|
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int a = 0; a < 4; ++a) {
        const double ga = (a == 0) ? 1.0 : -1.0;
        s += L[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] * ga *
             L[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)];
      }
      const double g = (i == j) ? ((i == 0) ? 1.0 : -1.0) : 0.0;
      worst = std::max(worst, std::abs(s - g));
    }
  return worst;
}

}  // namespace

TEST_CASE("constants validation") {
  CHECK_NOTHROW(Constants::natural());
  CHECK_NOTHROW(Constants::natural(-0.5));
  Constants k;
  k.sigma = -1.0;
  CHECK_THROWS_AS(k.validate(), InvalidArgument);
  k = Constants{};
  k.c = 0.0;
  CHECK_THROWS_AS(k.validate(), InvalidArgument);
  k = Constants{};
  k.tau = -1.0;
  CHECK_THROWS_AS(k.validate(), InvalidArgument);
}

TEST_CASE("minkowski dot basics") {
  CHECK(minkowski_dot({1, 0, 0, 0}, {1, 0, 0, 0}) == 1.0);

  // on-shell p with |p| = 3, mc = 4 -> p.p = 16
  Constants k;
  k.m = 2.0;
  k.c = 2.0;
  const FourVector p = on_shell_momentum({3.0, 0.0, 0.0}, k);
  CHECK(p[0] == doctest::Approx(5.0));
  CHECK(minkowski_dot(p, p) == doctest::Approx(16.0).epsilon(1e-14));

  // U = (sqrt(c^2+|u|^2), u), c = 1, u = (0.6,0,0): U.U = 1
  const Constants n = Constants::natural();
  const FourVector U = four_velocity_from_spatial({0.6, 0.0, 0.0}, n);
  CHECK(minkowski_dot(U, U) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("four velocity construction") {
  const Constants n = Constants::natural();
  const FourVector rest = four_velocity_from_spatial({0, 0, 0}, n);
  CHECK(rest[0] == 1.0);
  CHECK(rest[1] == 0.0);

  Constants k;
  k.c = 4.0;
  const FourVector U = four_velocity_from_spatial({3, 0, 0}, k);
  CHECK(U[0] == doctest::Approx(5.0));
  CHECK(U[1] == 3.0);

  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(four_velocity_from_spatial({inf, 0, 0}, k), NonFiniteInput);
}

TEST_CASE("boost maps U to rest frame") {
  Constants k;
  k.c = 4.0;
  const FourVector U{5, 3, 0, 0};
  const LorentzBoost b = LorentzBoost::from_four_velocity(U, k);
  const FourVector r = b.apply(U);
  CHECK(r[0] == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(std::abs(r[1]) < 1e-12);
  CHECK(std::abs(r[2]) < 1e-12);
  CHECK(std::abs(r[3]) < 1e-12);

  // defining property of the inverse
  const FourVector back = b.apply_inverse({4, 0, 0, 0});
  for (int i = 0; i < 4; ++i)
    CHECK(back[i] == doctest::Approx(U[i]).epsilon(1e-13));
}

TEST_CASE("rest-frame boost is the identity") {
  const Constants n = Constants::natural();
  const FourVector U{1, 0, 0, 0};
  const LorentzBoost b = LorentzBoost::from_four_velocity(U, n);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(b.matrix()[static_cast<std::size_t>(i)]
                      [static_cast<std::size_t>(j)] ==
            doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-15));

  const FourVector v{0.3, -1.2, 7.0, 0.25};
  const FourVector w = b.apply(v);
  for (int i = 0; i < 4; ++i) CHECK(w[i] == v[i]);
}

TEST_CASE("boost group properties over random timelike U") {
  std::mt19937_64 rng(0x5eed0001);
  for (const double c : {1.0, 2.9979}) {
    Constants k;
    k.c = c;
    for (int trial = 0; trial < 200; ++trial) {
      const FourVector U = random_four_velocity(rng, k);
      const LorentzBoost b = LorentzBoost::from_four_velocity(U, k);

      CHECK(mat_err_vs_metric(b.matrix()) < 1e-12);

      const FourVector r = b.apply(U);
      CHECK(std::abs(r[0] - k.c) < 1e-12 * k.c);
      for (int i = 1; i < 4; ++i) CHECK(std::abs(r[i]) < 1e-12 * k.c);

      // two-sided inverse
      for (int col = 0; col < 4; ++col) {
        FourVector e;
        e[col] = 1.0;
        const FourVector id1 = b.apply(b.apply_inverse(e));
        const FourVector id2 = b.apply_inverse(b.apply(e));
        for (int i = 0; i < 4; ++i) {
          CHECK(std::abs(id1[i] - e[i]) < 1e-12);
          CHECK(std::abs(id2[i] - e[i]) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("boost preserves the inner product") {
  std::mt19937_64 rng(0x5eed0002);
  const Constants k = Constants::natural();
  std::uniform_real_distribution<double> uni(-5.0, 5.0);
  for (int trial = 0; trial < 500; ++trial) {
    const FourVector U = random_four_velocity(rng, k);
    const LorentzBoost b = LorentzBoost::from_four_velocity(U, k);
    const FourVector v{uni(rng), uni(rng), uni(rng), uni(rng)};
    const FourVector w{uni(rng), uni(rng), uni(rng), uni(rng)};
    const double before = minkowski_dot(v, w);
    const double after = minkowski_dot(b.apply(v), b.apply(w));
    const double scale = std::max(1.0, std::abs(before));
    CHECK(std::abs(after - before) < 1e-10 * scale);

    // round trip on arbitrary vectors
    const FourVector rt = b.apply_inverse(b.apply(v));
    for (int i = 0; i < 4; ++i) CHECK(std::abs(rt[i] - v[i]) < 1e-12 * 10);
  }
}

TEST_CASE("on-shell closure") {
  std::mt19937_64 rng(0x5eed0003);
  Constants k;
  k.m = 0.5;
  k.c = 3.0;
  const double mc2 = k.mc() * k.mc();
  std::uniform_real_distribution<double> uni(-20.0, 20.0);
  for (int trial = 0; trial < 300; ++trial) {
    const FourVector p = on_shell_momentum({uni(rng), uni(rng), uni(rng)}, k);
    CHECK(minkowski_dot(p, p) == doctest::Approx(mc2).epsilon(1e-12));
  }
}

TEST_CASE("state density") {
  CHECK(state_density(1.0, -0.5) == 1.0);
  CHECK(state_density(1.0, 2.7) == 1.0);
  CHECK(state_density(4.0, 0.5) == doctest::Approx(2.0));
  CHECK(state_density(0.0, 0.0) == 1.0);  // monomial convention
  CHECK_THROWS_AS(state_density(-1.0, 0.5), NegativeInternalEnergy);
}

TEST_CASE("boost rejects bad input") {
  const Constants k = Constants::natural();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(LorentzBoost::from_four_velocity({nan, 0, 0, 0}, k),
                  NonFiniteInput);
}
