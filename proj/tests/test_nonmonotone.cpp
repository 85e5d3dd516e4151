//
// Project nmcg - Copyright 2026 the nmcg authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "nmcg/nonmonotone.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("trigonometric eta at the endpoints") {
  CHECK(nmcg::eta_trig(0.0) == 0.01);  // sin(0) is exact
  // ||g|| = 1: 0.95 sin(pi/3) + 0.01, with sin(pi/3) = sqrt(3)/2
  const double expected = 0.95 * std::sqrt(3.0) / 2.0 + 0.01;
  CHECK_THAT(nmcg::eta_trig(1.0), WithinAbs(expected, 1e-12));
  CHECK_THAT(nmcg::eta_trig(1.0), WithinAbs(0.832724, 1e-6));
  // large gradients approach (but never exceed) the 0.96 ceiling
  CHECK(nmcg::eta_trig(1e12) <= 0.96);
  CHECK(nmcg::eta_trig(1e12) >= 0.96 - 1e-6);
}

TEST_CASE("trigonometric eta stays in [0.01, 0.96] and moves continuously") {
  double prev = nmcg::eta_trig(0.0);
  const double step = 1e-3;
  // derivative is bounded by 0.95*pi, so adjacent samples differ by < 3.1*step
  for (double g = step; g <= 100.0; g += step) {
    const double eta = nmcg::eta_trig(g);
    CHECK(eta >= 0.01);
    CHECK(eta <= 0.96);
    CHECK(std::abs(eta - prev) <= 3.1 * step);
    prev = eta;
  }
}

TEST_CASE("Ahookhosh eta sequence") {
  CHECK_THAT(nmcg::eta_ahookhosh(0), WithinRel(0.15, 1e-14));
  CHECK_THAT(nmcg::eta_ahookhosh(1), WithinRel(0.075, 1e-14));
  for (int k = 25; k <= 100; ++k)
    CHECK(std::abs(nmcg::eta_ahookhosh(k) - 0.1) <= 1e-6);
}

TEST_CASE("Amini eta branches") {
  CHECK_THAT(nmcg::eta_amini(0.95, 1.0), WithinRel(0.9405, 1e-14));
  CHECK_THAT(nmcg::eta_amini(0.95, 1e-4), WithinRel(193.0 / 300.0, 1e-14));
  CHECK(nmcg::eta_amini(0.50, 1.0) == 0.5);  // max(0.495, 0.5) floor
}

TEST_CASE("Amini eta floors at 0.5 while the gradient stays large") {
  double eta = 0.95;
  for (int k = 0; k < 200; ++k) {
    eta = nmcg::eta_amini(eta, 2.0);
    CHECK(eta >= 0.5);
  }
  CHECK(eta == 0.5);
}

TEST_CASE("eta scheme names round-trip") {
  using nmcg::EtaScheme;
  CHECK(nmcg::parse_eta_scheme("trig") == EtaScheme::Trig);
  CHECK(nmcg::parse_eta_scheme("ahookhosh") == EtaScheme::Ahookhosh);
  CHECK(nmcg::parse_eta_scheme("amini") == EtaScheme::Amini);
  CHECK_THROWS_AS(nmcg::parse_eta_scheme("zhang"), std::invalid_argument);
  for (auto s : {EtaScheme::Trig, EtaScheme::Ahookhosh, EtaScheme::Amini})
    CHECK(nmcg::parse_eta_scheme(nmcg::to_string(s)) == s);
}

TEST_CASE("window update follows m_k = min(m_{k-1}+1, N)") {
  nmcg::NonmonotoneMemory mem(5, 10.0, 0.5);
  CHECK(mem.extent() == 0);
  CHECK(mem.window_max() == 10.0);

  mem.push(8.0);  // window {10, 8}
  CHECK(mem.extent() == 1);
  CHECK(mem.window_max() == 10.0);

  mem.push(9.0);  // window {10, 8, 9}
  CHECK(mem.extent() == 2);
  CHECK(mem.window_max() == 10.0);
}

TEST_CASE("N = 0 recovers the monotone reference") {
  nmcg::NonmonotoneMemory mem(0, 10.0, 0.9);
  mem.push(7.0);
  CHECK(mem.extent() == 0);
  CHECK(mem.window_max() == 7.0);
  mem.push(12.0);
  CHECK(mem.window_max() == 12.0);
  CHECK(mem.reference_value(12.0) == 12.0);
}

TEST_CASE("reference value blends the window maximum with the current value") {
  nmcg::NonmonotoneMemory mem(5, 5.0, 0.5);
  mem.push(2.0);
  CHECK_THAT(mem.reference_value(2.0), WithinAbs(3.5, 1e-15));  // midpoint

  mem.set_eta(0.0);
  CHECK(mem.reference_value(2.0) == 2.0);  // monotone limit
  mem.set_eta(1.0);
  CHECK(mem.reference_value(2.0) == 5.0);  // max-type limit
}

TEST_CASE("window maximum matches a brute-force recount on random traces") {
  std::mt19937 rng(20260810);
  std::uniform_real_distribution<double> val(-5.0, 5.0);
  for (int cap : {0, 1, 2, 5, 9}) {
    std::deque<double> shadow;
    const double f0 = val(rng);
    nmcg::NonmonotoneMemory mem(cap, f0, 0.3);
    shadow.push_back(f0);
    int m = 0;
    for (int step = 0; step < 200; ++step) {
      const double f = val(rng);
      mem.push(f);
      shadow.push_back(f);
      if (static_cast<int>(shadow.size()) > cap + 1) shadow.pop_front();
      m = std::min(m + 1, cap);
      const double expected =
          *std::max_element(shadow.end() - (m + 1), shadow.end());
      REQUIRE(mem.extent() == m);
      REQUIRE(mem.window_max() == expected);
      REQUIRE(mem.window_max() >= f);  // f_k never exceeds the window max
      const double r = mem.reference_value(f);
      REQUIRE(r >= std::min(f, mem.window_max()) - 1e-15);
      REQUIRE(r <= mem.window_max() + 1e-15);
    }
  }
}

TEST_CASE("negative window cap is rejected") {
  CHECK_THROWS_AS(nmcg::NonmonotoneMemory(-1, 0.0, 0.5), std::invalid_argument);
}
