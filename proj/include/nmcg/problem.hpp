//
// Project nmcg - Copyright 2026 the nmcg authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace nmcg {

using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Unconstrained objective with an analytic gradient and a canonical
/// starting point. Instances are immutable after construction and safe to
/// evaluate from concurrent workers; evaluation counts are kept per run,
/// never inside the problem.
struct Problem {
  std::string name;
  Index dimension = 0;
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> gradient;
  Vector initial_point;
  std::optional<double> known_optimum;  // objective value at a minimizer, when known
};

struct EvalCounters {
  long function_evals = 0;
  long gradient_evals = 0;
};

/// A value or gradient evaluation produced a non-finite result.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest relative disagreement between the analytic gradient and a
/// central difference with step h:
///   max_i |cd_i - g_i| / max(1, |g_i|).
inline double check_gradient(const Problem& problem, const Vector& x, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("check_gradient: h must be positive");
  if (!x.allFinite()) throw std::invalid_argument("check_gradient: x must be finite");

  Vector g = problem.gradient(x);
  if (g.size() != problem.dimension)
    throw std::invalid_argument("check_gradient: gradient size does not match dimension");
  if (!g.allFinite())
    throw EvaluationError("check_gradient: non-finite analytic gradient at x (" +
                          problem.name + ")");

  double worst = 0.0;
  Vector xp = x;
  for (Index i = 0; i < x.size(); ++i) {
    xp(i) = x(i) + h;
    const double fp = problem.value(xp);
    xp(i) = x(i) - h;
    const double fm = problem.value(xp);
    xp(i) = x(i);
    if (!std::isfinite(fp) || !std::isfinite(fm))
      throw EvaluationError("check_gradient: non-finite value near coordinate " +
                            std::to_string(i) + " (" + problem.name + ")");
    const double cd = (fp - fm) / (2.0 * h);
    const double rel = std::abs(cd - g(i)) / std::max(1.0, std::abs(g(i)));
    worst = std::max(worst, rel);
  }
  return worst;
}

}  // namespace nmcg
