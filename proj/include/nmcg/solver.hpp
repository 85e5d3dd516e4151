//
// Project nmcg - Copyright 2026 the nmcg authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nmcg/direction.hpp"
#include "nmcg/nonmonotone.hpp"
#include "nmcg/problem.hpp"
#include "nmcg/stepsize.hpp"

namespace nmcg {

/// Optional replacement for the built-in CG parameter; receives the new
/// gradient, the previous gradient, and the previous direction. Lets other
/// beta formulas run through the same driver and line search.
using BetaRule =
    std::function<double(const Vector& g, const Vector& g_prev, const Vector& d_prev)>;

struct SolverConfig {
  double gamma = 1e-4;    // sufficient-decrease constant in the acceptance test
  double rho = 0.75;      // backtracking shrink factor
  int window = 5;         // N, cap on the non-monotone history extent
  double c = 1e-4;        // descent constant; recorded for invariant checks, unused by the iteration
  double epsilon = 1e-6;  // gradient-norm stopping tolerance
  int max_iter = 20000;
  EtaScheme eta_scheme = EtaScheme::Trig;
  std::optional<double> fixed_omega;  // constant omega in (0,1); adaptive rule when unset
  double alpha_min = 1e-10;
  double alpha_max = 1e10;
  int backtrack_cap = 60;  // rho = 0.75 puts the trial below 1e-7 * alpha0 at the cap
  bool record_trace = false;
  BetaRule beta_rule;  // empty = omega-bounded built-in parameter

  void validate() const {
    if (!(gamma > 0.0 && gamma < 1.0))
      throw std::invalid_argument("SolverConfig: gamma must lie in (0,1)");
    if (!(rho > 0.0 && rho < 1.0))
      throw std::invalid_argument("SolverConfig: rho must lie in (0,1)");
    if (window < 0) throw std::invalid_argument("SolverConfig: window must be >= 0");
    if (!(c > 0.0)) throw std::invalid_argument("SolverConfig: c must be positive");
    if (!(epsilon > 0.0))
      throw std::invalid_argument("SolverConfig: epsilon must be positive");
    if (max_iter < 1) throw std::invalid_argument("SolverConfig: max_iter must be >= 1");
    if (fixed_omega && !(*fixed_omega > 0.0 && *fixed_omega < 1.0))
      throw std::invalid_argument("SolverConfig: fixed omega must lie in (0,1)");
    if (!(alpha_min > 0.0 && alpha_min <= alpha_max))
      throw std::invalid_argument("SolverConfig: need 0 < alpha_min <= alpha_max");
    if (backtrack_cap < 1)
      throw std::invalid_argument("SolverConfig: backtrack_cap must be >= 1");
  }
};

enum class SolveStatus { Converged, IterationLimit, LineSearchFailure, NumericalError };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::IterationLimit: return "iteration_limit";
    case SolveStatus::LineSearchFailure: return "line_search_failure";
    case SolveStatus::NumericalError: return "numerical_error";
  }
  return "?";
}

/// Per-iteration record. Row k describes the state at iterate x_k plus the
/// step taken from it; the final row describes the terminal iterate and has
/// alpha = beta = trial_alpha = 0 (no step is taken from it). The last four
/// fields are direction diagnostics: omega is the weight that built d_k
/// (0 for steepest-descent rows), gTd = g_k'd_k, dnorm = ||d_k||, and
/// trial_alpha is the clamped spectral trial fed to the line search.
struct TraceRecord {
  int k = 0;
  double f = 0, gnorm = 0, alpha = 0, eta = 0, beta = 0, flk = 0, Rk = 0;
  double omega = 0, gTd = 0, dnorm = 0, trial_alpha = 0;
};

struct SolverReport {
  SolveStatus status = SolveStatus::NumericalError;
  int iterations = 0;
  EvalCounters counters;
  double final_gradient_norm = std::numeric_limits<double>::quiet_NaN();
  double final_value = std::numeric_limits<double>::quiet_NaN();
  Vector final_point;
  double wall_time = 0.0;  // seconds around the run only
  int restarts = 0;        // steepest-descent safety resets; never fires in exact arithmetic
  std::vector<TraceRecord> trace;
};

/// Feasible-set hooks for constrained variants: project maps a trial point
/// onto the set, stationarity_norm replaces ||g|| in the stopping rule
/// (plain gradient norm when absent).
struct ProjectionOps {
  std::function<void(Vector&)> project;
  std::function<double(const Vector& x, const Vector& g)> stationarity_norm;
};

struct LineSearchResult {
  bool accepted = false;
  double alpha = 0.0;  // accepted step, or the last rejected trial on failure
  double f_new = std::numeric_limits<double>::quiet_NaN();
  int evals = 0;  // objective evaluations consumed
  Vector x_new;
};

/// Backtracking search for the first alpha in {alpha0 rho^j, j = 0, 1, ...}
/// with
///   f(P(x + alpha d)) <= R + gamma alpha g'd,
/// where P is the projection (identity when none is supplied). A non-finite
/// trial value counts as a rejection, so the search retreats from poles and
/// overflow regions on its own. Gives up once j exceeds backtrack_cap.
inline LineSearchResult backtrack(const Problem& problem, const Vector& x,
                                  const Vector& d, const Vector& g, double R,
                                  double alpha0, const SolverConfig& cfg,
                                  const std::function<void(Vector&)>& project = {}) {
  const double slope = g.dot(d);
  LineSearchResult result;
  double alpha = alpha0;
  for (int j = 0; j <= cfg.backtrack_cap; ++j) {
    Vector trial = x + alpha * d;
    if (project) project(trial);
    const double f_trial = problem.value(trial);
    ++result.evals;
    if (f_trial <= R + cfg.gamma * alpha * slope) {
      result.accepted = true;
      result.alpha = alpha;
      result.f_new = f_trial;
      result.x_new = std::move(trial);
      return result;
    }
    alpha *= cfg.rho;
  }
  result.alpha = alpha / cfg.rho;  // last trial that was rejected
  return result;
}

namespace detail {

inline double initial_eta(EtaScheme scheme, double gnorm0) {
  switch (scheme) {
    case EtaScheme::Trig: return eta_trig(gnorm0);
    case EtaScheme::Ahookhosh: return eta_ahookhosh(0);
    case EtaScheme::Amini: return 0.95;
  }
  return 0.0;
}

inline double next_eta(EtaScheme scheme, int k_next, double eta_prev,
                       const Vector& g_new) {
  switch (scheme) {
    case EtaScheme::Trig: return eta_trig(g_new.norm());
    case EtaScheme::Ahookhosh: return eta_ahookhosh(k_next);
    case EtaScheme::Amini:
      return eta_amini(eta_prev, g_new.lpNorm<Eigen::Infinity>());
  }
  return eta_prev;
}

inline SolverReport run(const Problem& problem, Vector x, const SolverConfig& cfg,
                        const ProjectionOps* ops) {
  cfg.validate();
  if (x.size() != problem.dimension)
    throw std::invalid_argument("minimize: starting point dimension mismatch");

  const auto t_start = std::chrono::steady_clock::now();
  SolverReport rep;
  auto finalize = [&](SolveStatus status, int k, double f, double stat,
                      Vector&& point) {
    rep.status = status;
    rep.iterations = k;
    rep.final_value = f;
    rep.final_gradient_norm = stat;
    rep.final_point = std::move(point);
    rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                  t_start)
                        .count();
    return rep;
  };
  auto stationarity = [&](const Vector& point, const Vector& grad) {
    return (ops && ops->stationarity_norm) ? ops->stationarity_norm(point, grad)
                                           : grad.norm();
  };
  const std::function<void(Vector&)> project =
      (ops && ops->project) ? ops->project : std::function<void(Vector&)>{};

  if (project) project(x);
  double f = problem.value(x);
  ++rep.counters.function_evals;
  Vector g = problem.gradient(x);
  ++rep.counters.gradient_evals;
  if (!std::isfinite(f) || !g.allFinite())
    return finalize(SolveStatus::NumericalError, 0, f, std::numeric_limits<double>::quiet_NaN(),
                    std::move(x));

  double gnorm = g.norm();
  double stat = stationarity(x, g);
  double eta = initial_eta(cfg.eta_scheme, gnorm);
  NonmonotoneMemory memory(cfg.window, f, eta);
  Vector d = cg_direction(g);
  double dir_omega = 0.0;  // weight that built the current d; 0 = steepest descent
  StepPair pair;
  bool have_pair = false;

  int k = 0;
  SolveStatus status;
  while (true) {
    if (stat < cfg.epsilon) {
      status = SolveStatus::Converged;
      break;
    }
    if (k >= cfg.max_iter) {
      status = SolveStatus::IterationLimit;
      break;
    }

    const double flk = memory.window_max();
    const double R = memory.reference_value(f);
    const double trial = have_pair
                             ? cbb_step(pair, cfg.alpha_min, cfg.alpha_max)
                             : first_trial_step(gnorm, cfg.alpha_min, cfg.alpha_max);
    const double gTd = g.dot(d);
    const double dnorm = d.norm();

    auto ls = backtrack(problem, x, d, g, R, trial, cfg, project);
    rep.counters.function_evals += ls.evals;
    if (!ls.accepted) {
      status = SolveStatus::LineSearchFailure;
      break;
    }

    Vector g_new = problem.gradient(ls.x_new);
    ++rep.counters.gradient_evals;
    if (!g_new.allFinite()) {
      status = SolveStatus::NumericalError;
      break;
    }

    pair.s = ls.x_new - x;
    pair.y = g_new - g;
    have_pair = true;

    // Next direction: d_{k+1} = -g_{k+1} + beta d_k, with the safety restart
    // that the theory says never fires.
    double beta = 0.0;
    double omega_next = 0.0;
    const double gnorm_new = g_new.norm();
    if (dnorm > 0.0 && gnorm_new > 0.0) {
      if (cfg.beta_rule) {
        beta = cfg.beta_rule(g_new, g, d);
        omega_next = beta * dnorm / gnorm_new;  // implied weight, for diagnostics
      } else {
        omega_next = cfg.fixed_omega ? *cfg.fixed_omega : omega_adaptive(g_new, g, d);
        beta = beta_bounded(g_new, d, omega_next);
      }
    }
    Vector d_new = (beta != 0.0) ? cg_direction(g_new, d, beta) : cg_direction(g_new);
    if (d_new.dot(g_new) > -1e-12 * g_new.squaredNorm()) {
      d_new = cg_direction(g_new);
      beta = 0.0;
      omega_next = 0.0;
      ++rep.restarts;
    }
    if (beta == 0.0) omega_next = 0.0;

    if (cfg.record_trace)
      rep.trace.push_back({k, f, gnorm, ls.alpha, memory.eta(), beta, flk, R,
                           dir_omega, gTd, dnorm, trial});

    eta = next_eta(cfg.eta_scheme, k + 1, eta, g_new);
    memory.set_eta(eta);
    memory.push(ls.f_new);

    x = std::move(ls.x_new);
    f = ls.f_new;
    g = std::move(g_new);
    d = std::move(d_new);
    dir_omega = omega_next;
    gnorm = g.norm();
    stat = stationarity(x, g);
    ++k;
  }

  // Terminal row: the iterate the run stopped at (no step taken from it).
  if (cfg.record_trace)
    rep.trace.push_back({k, f, gnorm, 0.0, memory.eta(), 0.0, memory.window_max(),
                         memory.reference_value(f), dir_omega, g.dot(d), d.norm(),
                         0.0});
  return finalize(status, k, f, stat, std::move(x));
}

}  // namespace detail

/// Non-monotone conjugate gradient driver: spectral trial step, backtracking
/// acceptance against the reference value R_k, omega-bounded CG parameter.
/// Stops when ||g_k|| < epsilon or the iteration cap is hit.
inline SolverReport minimize(const Problem& problem, const Vector& x0,
                             const SolverConfig& cfg = {}) {
  return detail::run(problem, x0, cfg, nullptr);
}

/// Same driver with every trial point projected onto a feasible set and the
/// stopping rule taken from ops.stationarity_norm.
inline SolverReport minimize_projected(const Problem& problem, const Vector& x0,
                                       const SolverConfig& cfg,
                                       const ProjectionOps& ops) {
  return detail::run(problem, x0, cfg, &ops);
}

}  // namespace nmcg
