//
// Project nmcg - Copyright 2026 the nmcg authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <stdexcept>

#include "nmcg/problem.hpp"

namespace nmcg {

/// Successive iterate and gradient differences, s = x_k - x_{k-1} and
/// y = g_k - g_{k-1}, feeding the spectral trial step.
struct StepPair {
  Vector s;
  Vector y;
};

/// Convex combination of the two Barzilai-Borwein steps
///   a1 = s's / s'y,  a2 = s'y / y'y,
/// weighted by the secant residuals K1 = ||a1 y - s||^2 and
/// K2 = ||s / a2 - y||^2 as mu = K2 / (K1 + K2):
///   alpha = mu a1 + (1 - mu) a2, clamped to [alpha_min, alpha_max].
///
/// Degenerate inputs are defined, not errors: K1 + K2 = 0 means both steps
/// coincide and a1 is returned; nonpositive curvature (s'y <= 0) falls back
/// to ||s|| / ||y||, or 1 when y = 0.
inline double cbb_step(const StepPair& pair, double alpha_min = 1e-10,
                       double alpha_max = 1e10) {
  if (!(alpha_min <= alpha_max))
    throw std::invalid_argument("cbb_step: alpha_min must not exceed alpha_max");
  auto clamp = [&](double a) { return std::clamp(a, alpha_min, alpha_max); };

  const double sty = pair.s.dot(pair.y);
  if (sty > 0.0) {
    const double a1 = pair.s.squaredNorm() / sty;
    const double a2 = sty / pair.y.squaredNorm();
    const double k1 = (a1 * pair.y - pair.s).squaredNorm();
    const double k2 = (pair.s / a2 - pair.y).squaredNorm();
    if (k1 + k2 == 0.0) return clamp(a1);  // y exactly proportional to s
    const double mu = k2 / (k1 + k2);
    return clamp(mu * a1 + (1.0 - mu) * a2);
  }

  const double ynorm = pair.y.norm();
  if (ynorm == 0.0) return clamp(1.0);
  return clamp(pair.s.norm() / ynorm);
}

/// Trial step for the first iteration, before any (s, y) pair exists:
/// 1 / ||g0|| clamped (alpha_max when the gradient vanishes).
inline double first_trial_step(double gradient_norm, double alpha_min = 1e-10,
                               double alpha_max = 1e10) {
  if (!(alpha_min <= alpha_max))
    throw std::invalid_argument("first_trial_step: alpha_min must not exceed alpha_max");
  if (gradient_norm <= 0.0) return alpha_max;
  return std::clamp(1.0 / gradient_norm, alpha_min, alpha_max);
}

}  // namespace nmcg
