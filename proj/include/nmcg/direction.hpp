//
// Project nmcg - Copyright 2026 the nmcg authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cmath>
#include <stdexcept>

#include "nmcg/problem.hpp"

namespace nmcg {

/// Adaptive coupling weight from the alignment of the new gradient with the
/// previous direction,
///   t = |g'd_prev| / (-g_prev'd_prev),
/// clipped to [0.001, 0.999]. The denominator is positive whenever d_prev
/// is a descent direction at the previous iterate.
inline double omega_adaptive(const Vector& g, const Vector& g_prev,
                             const Vector& d_prev) {
  const double denom = -g_prev.dot(d_prev);
  if (!(denom > 0.0))
    throw std::invalid_argument(
        "omega_adaptive: previous direction is not a descent direction");
  const double t = std::abs(g.dot(d_prev)) / denom;
  if (t <= 0.0) return 0.001;
  if (t >= 1.0) return 0.999;
  return t;
}

/// beta = omega ||g|| / ||d_prev||. With omega < 1 this keeps
/// beta ||d_prev|| strictly below ||g||, which is what bounds the new
/// direction and preserves sufficient descent.
inline double beta_bounded(const Vector& g, const Vector& d_prev, double omega) {
  const double dnorm = d_prev.norm();
  if (dnorm == 0.0)
    throw std::invalid_argument("beta_bounded: degenerate previous direction");
  return omega * g.norm() / dnorm;
}

/// d_0 = -g_0.
inline Vector cg_direction(const Vector& g) { return -g; }

/// d_k = -g_k + beta d_{k-1}. For beta from beta_bounded with weight omega,
/// the result satisfies g'd <= -(1 - omega) ||g||^2 and
/// ||d|| <= (1 + omega) ||g||.
inline Vector cg_direction(const Vector& g, const Vector& d_prev, double beta) {
  return -g + beta * d_prev;
}

}  // namespace nmcg
