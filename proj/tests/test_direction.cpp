//
// Project nmcg - Copyright 2026 the nmcg authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cmath>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "nmcg/direction.hpp"

using Catch::Matchers::WithinAbs;
using nmcg::Vector;

namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

}  // namespace

TEST_CASE("adaptive omega follows the alignment ratio") {
  const Vector d_prev = vec2(1, 0);
  const Vector g_prev = vec2(-1, 0);  // -g_prev'd_prev = 1

  CHECK_THAT(nmcg::omega_adaptive(vec2(-0.3, 2.0), g_prev, d_prev),
             WithinAbs(0.3, 1e-15));                                  // middle branch
  CHECK(nmcg::omega_adaptive(vec2(0, 5), g_prev, d_prev) == 0.001);   // t = 0
  CHECK(nmcg::omega_adaptive(vec2(5, 0), g_prev, d_prev) == 0.999);   // t >= 1
  CHECK(nmcg::omega_adaptive(vec2(1, 0), g_prev, d_prev) == 0.999);   // t = 1 boundary
}

TEST_CASE("adaptive omega rejects a broken descent invariant") {
  CHECK_THROWS_AS(nmcg::omega_adaptive(vec2(1, 0), vec2(1, 0), vec2(1, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(nmcg::omega_adaptive(vec2(1, 0), vec2(0, 1), vec2(1, 0)),
                  std::invalid_argument);  // orthogonal: denominator zero
}

TEST_CASE("bounded CG parameter") {
  CHECK_THAT(nmcg::beta_bounded(vec2(2, 0), vec2(0, 4), 0.5), WithinAbs(0.25, 1e-15));
  CHECK(nmcg::beta_bounded(vec2(0, 0), vec2(1, 1), 0.7) == 0.0);  // zero gradient
  CHECK_THAT(nmcg::beta_bounded(vec2(3, 4), vec2(0, 5), 0.37),
             WithinAbs(0.37, 1e-15));  // equal norms give omega itself
  CHECK_THROWS_AS(nmcg::beta_bounded(vec2(1, 1), vec2(0, 0), 0.5),
                  std::invalid_argument);
}

TEST_CASE("search direction recurrence") {
  const Vector d0 = nmcg::cg_direction(vec2(3, 4));
  CHECK(d0 == vec2(-3, -4));
  CHECK_THAT(d0.dot(vec2(3, 4)), WithinAbs(-25.0, 1e-15));

  // g = (1,0), d_prev = (0,2), beta = 0.25 -> d = (-1, 0.5); the omega that
  // produced this beta is beta*||d_prev||/||g|| = 0.5, so ||d|| <= 1.5.
  const Vector d = nmcg::cg_direction(vec2(1, 0), vec2(0, 2), 0.25);
  CHECK(d == vec2(-1, 0.5));
  CHECK(d.norm() <= (1.0 + 0.5) * 1.0);

  CHECK(nmcg::cg_direction(vec2(0, 0)) == vec2(0, 0));  // stationary point
}

TEST_CASE("sufficient descent and the direction bound hold for random inputs") {
  std::mt19937 rng(123);
  std::normal_distribution<double> gauss(0.0, 2.0);
  std::uniform_real_distribution<double> uomega(0.001, 0.999);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 30);
    const Vector g = Vector::NullaryExpr(n, [&] { return gauss(rng); });
    Vector d_prev = Vector::NullaryExpr(n, [&] { return gauss(rng); });
    if (d_prev.norm() == 0.0) d_prev(0) = 1.0;
    const double omega = uomega(rng);

    const double beta = nmcg::beta_bounded(g, d_prev, omega);
    REQUIRE(beta >= 0.0);
    if (g.norm() > 0.0)
      REQUIRE(beta < g.norm() / d_prev.norm());  // strict, since omega < 1

    const Vector d = nmcg::cg_direction(g, d_prev, beta);
    const double g2 = g.squaredNorm();
    REQUIRE(g.dot(d) <= -(1.0 - omega) * g2 + 1e-12 * g2);
    REQUIRE(d.norm() <= (1.0 + omega) * g.norm() + 1e-12);
  }
}
