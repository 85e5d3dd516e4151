//
// Project nmcg - Copyright 2026 the nmcg authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cmath>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "nmcg/stepsize.hpp"

using Catch::Matchers::WithinAbs;
using nmcg::StepPair;
using nmcg::Vector;

namespace {

StepPair make_pair2(double s0, double s1, double y0, double y1) {
  StepPair p;
  p.s = Vector(2);
  p.s << s0, s1;
  p.y = Vector(2);
  p.y << y0, y1;
  return p;
}

}  // namespace

TEST_CASE("blended spectral step on the worked 2-d example") {
  // s = (1,1), y = (1,2): a1 = 2/3, a2 = 3/5, K1 = 2/9, K2 = 5/9, mu = 5/7,
  // alpha = (5/7)(2/3) + (2/7)(3/5) = 68/105.
  const StepPair p = make_pair2(1, 1, 1, 2);
  CHECK_THAT(nmcg::cbb_step(p), WithinAbs(68.0 / 105.0, 1e-12));
}

TEST_CASE("identity curvature gives step one") {
  const StepPair p = make_pair2(0.3, -0.7, 0.3, -0.7);
  CHECK_THAT(nmcg::cbb_step(p), WithinAbs(1.0, 1e-15));
}

TEST_CASE("exactly proportional y collapses both steps") {
  // y = 2s makes K1 = K2 = 0 and both candidates equal 1/2.
  const StepPair p = make_pair2(1, -3, 2, -6);
  CHECK_THAT(nmcg::cbb_step(p), WithinAbs(0.5, 1e-15));
}

TEST_CASE("nonpositive curvature falls back to the norm ratio") {
  const StepPair p = make_pair2(1, 0, -2, 0);  // s'y = -2
  CHECK_THAT(nmcg::cbb_step(p), WithinAbs(0.5, 1e-15));
  CHECK(nmcg::cbb_step(p, 0.6, 10.0) == 0.6);  // clamped from below
  CHECK(nmcg::cbb_step(p, 1e-10, 0.25) == 0.25);

  StepPair zero_y = make_pair2(1, 1, 0, 0);
  CHECK(nmcg::cbb_step(zero_y) == 1.0);
}

TEST_CASE("clamping applies on the positive-curvature branch too") {
  const StepPair p = make_pair2(1, 1, 1, 2);
  CHECK(nmcg::cbb_step(p, 0.9, 10.0) == 0.9);
  CHECK(nmcg::cbb_step(p, 1e-10, 0.1) == 0.1);
}

TEST_CASE("step is scale invariant") {
  std::mt19937 rng(42);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    StepPair p;
    p.s = Vector::NullaryExpr(n, [&] { return gauss(rng); });
    p.y = Vector::NullaryExpr(n, [&] { return gauss(rng); });
    if (p.y.norm() == 0.0) continue;
    const double base = nmcg::cbb_step(p);
    for (double c : {1e-6, 1.0, 1e6}) {
      StepPair scaled;
      scaled.s = c * p.s;
      scaled.y = c * p.y;
      CHECK_THAT(nmcg::cbb_step(scaled), WithinAbs(base, 1e-10 * base));
    }
  }
}

TEST_CASE("blend weight keeps the step between the two spectral candidates") {
  std::mt19937 rng(7);
  std::normal_distribution<double> gauss(0.0, 1.0);
  int exercised = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    StepPair p;
    p.s = Vector::NullaryExpr(n, [&] { return gauss(rng); });
    p.y = Vector::NullaryExpr(n, [&] { return gauss(rng); });
    const double sty = p.s.dot(p.y);
    if (sty <= 0.0) continue;
    ++exercised;
    const double a1 = p.s.squaredNorm() / sty;
    const double a2 = sty / p.y.squaredNorm();
    REQUIRE(a2 <= a1 * (1.0 + 1e-12));  // Cauchy-Schwarz ordering
    const double alpha = nmcg::cbb_step(p);
    REQUIRE(alpha >= a2 * (1.0 - 1e-12));
    REQUIRE(alpha <= a1 * (1.0 + 1e-12));
  }
  CHECK(exercised > 50);
}

TEST_CASE("first trial step is the inverse gradient norm, clamped") {
  CHECK_THAT(nmcg::first_trial_step(4.0), WithinAbs(0.25, 1e-15));
  CHECK(nmcg::first_trial_step(1e-20) == 1e10);   // clamped above
  CHECK(nmcg::first_trial_step(1e20) == 1e-10);   // clamped below
  CHECK(nmcg::first_trial_step(0.0) == 1e10);     // stationary start
}

TEST_CASE("inverted clamp bounds are rejected") {
  const StepPair p = make_pair2(1, 1, 1, 2);
  CHECK_THROWS_AS(nmcg::cbb_step(p, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(nmcg::first_trial_step(1.0, 1.0, 0.5), std::invalid_argument);
}
