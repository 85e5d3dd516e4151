//
// Project nmcg - Copyright 2026 the nmcg authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nmcg/solver.hpp"

namespace nmcg {

using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// F(W, H) = (1/2) ||V - WH||_F^2.
inline double nmf_objective(const RowMatrix& V, const RowMatrix& W,
                            const RowMatrix& H) {
  if (W.rows() != V.rows() || H.cols() != V.cols() || W.cols() != H.rows())
    throw std::invalid_argument("nmf_objective: dimension mismatch");
  return 0.5 * (V - W * H).squaredNorm();
}

/// (grad_W, grad_H) = ((WH - V) H', W' (WH - V)).
inline std::pair<RowMatrix, RowMatrix> nmf_gradients(const RowMatrix& V,
                                                     const RowMatrix& W,
                                                     const RowMatrix& H) {
  const RowMatrix R = W * H - V;
  return {R * H.transpose(), W.transpose() * R};
}

/// Frobenius norm of the stacked factor gradients. With projected = true,
/// entries of a factor sitting at the zero bound contribute only their
/// inward (negative) gradient components.
inline double stacked_gradient_norm(const RowMatrix& V, const RowMatrix& W,
                                    const RowMatrix& H, bool projected = false) {
  const auto [gw, gh] = nmf_gradients(V, W, H);
  if (!projected) return std::sqrt(gw.squaredNorm() + gh.squaredNorm());
  auto masked = [](const RowMatrix& x, const RowMatrix& g) {
    double s = 0.0;
    const double* xp = x.data();
    const double* gp = g.data();
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double gi = (xp[i] > 0.0) ? gp[i] : std::min(gp[i], 0.0);
      s += gi * gi;
    }
    return s;
  };
  return std::sqrt(masked(W, gw) + masked(H, gh));
}

struct NmfConfig {
  double eps = 1e-4;            // outer stop: stacked gradient vs its initial value
  int outer_cap = 200;
  double inner_rel_tol = 1e-4;  // inner stop, relative to the sweep's first projected gradient
  int inner_cap = 50;           // inner iterations per subproblem sweep
  bool projected_stopping = false;  // outer rule with projected instead of plain gradients
  SolverConfig solver;              // inner CG settings (eta scheme, gamma, rho, ...)
};

struct NmfReport {
  int iter = 0;     // outer iterations
  long niter = 0;   // inner iterations, both factors, all sweeps
  double pgn = 0;   // stacked gradient norm at exit
  double time = 0;  // seconds
  double error = 0; // F(W, H) / ||V||_F^2
  int warnings = 0; // sweeps cut short by a failed projected line search
  std::vector<double> objective_history;  // F after init and each outer iteration
};

struct SubproblemResult {
  RowMatrix factor;
  int inner_iters = 0;
  bool line_search_warning = false;
};

namespace detail {

// Runs the projected non-monotone CG on one factor, the other held fixed.
// transposed = false solves for W in (1/2)||V - WH||^2, transposed = true
// solves for H. The factor is flattened row-major into the solver's vector.
inline SubproblemResult solve_factor(const RowMatrix& V, const RowMatrix& fixed,
                                     const RowMatrix& start, bool transposed,
                                     const NmfConfig& cfg) {
  const Eigen::Index rows = start.rows(), cols = start.cols();
  Problem sub;
  sub.name = transposed ? "nmf_subproblem_H" : "nmf_subproblem_W";
  sub.dimension = rows * cols;
  sub.value = [&V, &fixed, rows, cols, transposed](const Vector& v) {
    Eigen::Map<const RowMatrix> X(v.data(), rows, cols);
    return transposed ? 0.5 * (V - fixed * X).squaredNorm()
                      : 0.5 * (V - X * fixed).squaredNorm();
  };
  sub.gradient = [&V, &fixed, rows, cols, transposed](const Vector& v) {
    Eigen::Map<const RowMatrix> X(v.data(), rows, cols);
    RowMatrix G = transposed ? RowMatrix(fixed.transpose() * (fixed * X - V))
                             : RowMatrix((X * fixed - V) * fixed.transpose());
    return Vector(Eigen::Map<const Vector>(G.data(), G.size()));
  };
  sub.initial_point = Eigen::Map<const Vector>(start.data(), start.size());

  ProjectionOps ops;
  ops.project = [](Vector& x) { x = x.cwiseMax(0.0); };
  ops.stationarity_norm = [](const Vector& x, const Vector& g) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double gi = (x(i) > 0.0) ? g(i) : std::min(g(i), 0.0);
      s += gi * gi;
    }
    return std::sqrt(s);
  };

  SolverConfig scfg = cfg.solver;
  scfg.max_iter = cfg.inner_cap;
  scfg.record_trace = false;
  const double pg0 =
      ops.stationarity_norm(sub.initial_point, sub.gradient(sub.initial_point));
  scfg.epsilon =
      std::max(cfg.inner_rel_tol * pg0, std::numeric_limits<double>::min());

  SolverReport rep = minimize_projected(sub, sub.initial_point, scfg, ops);
  SubproblemResult out;
  out.factor = Eigen::Map<const RowMatrix>(rep.final_point.data(), rows, cols);
  out.inner_iters = rep.iterations;
  out.line_search_warning = rep.status == SolveStatus::LineSearchFailure;
  return out;
}

}  // namespace detail

/// min_{W >= 0} (1/2) ||V - W H_fixed||_F^2 starting from W_start, solved
/// inexactly by the projected non-monotone CG. The result never has a larger
/// objective than the start; a failed projected line search returns the best
/// iterate reached so far with the warning flag set.
inline SubproblemResult solve_subproblem_W(const RowMatrix& V,
                                           const RowMatrix& H_fixed,
                                           const RowMatrix& W_start,
                                           const NmfConfig& cfg = {}) {
  return detail::solve_factor(V, H_fixed, W_start, false, cfg);
}

/// min_{H >= 0} (1/2) ||V - W_fixed H||_F^2, symmetric to solve_subproblem_W.
inline SubproblemResult solve_subproblem_H(const RowMatrix& V,
                                           const RowMatrix& W_fixed,
                                           const RowMatrix& H_start,
                                           const NmfConfig& cfg = {}) {
  return detail::solve_factor(V, W_fixed, H_start, true, cfg);
}

struct NmfResult {
  RowMatrix W;
  RowMatrix H;
  NmfReport report;
};

/// Alternating nonnegative least squares: W and H start uniform in [0, 1]
/// from the seed, then alternate inexact projected-CG solves until the
/// stacked gradient norm falls below eps times its initial value or
/// outer_cap sweeps have run. F(W, H) never increases across sweeps.
inline NmfResult anls(const RowMatrix& V, int rank, const NmfConfig& cfg = {},
                      unsigned long seed = 0) {
  if ((V.array() < 0.0).any())
    throw std::invalid_argument("anls: V must be nonnegative");
  if (rank < 1 || rank > std::min(V.rows(), V.cols()))
    throw std::invalid_argument("anls: rank must lie in [1, min(m, n)]");

  const auto t_start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  NmfResult res;
  res.W = RowMatrix::NullaryExpr(V.rows(), rank, [&] { return unif(rng); });
  res.H = RowMatrix::NullaryExpr(rank, V.cols(), [&] { return unif(rng); });

  NmfReport& rep = res.report;
  const double pgn0 =
      stacked_gradient_norm(V, res.W, res.H, cfg.projected_stopping);
  double pgn = pgn0;
  rep.objective_history.push_back(nmf_objective(V, res.W, res.H));

  int t = 0;
  while (t < cfg.outer_cap && pgn > cfg.eps * pgn0) {
    auto rw = solve_subproblem_W(V, res.H, res.W, cfg);
    res.W = std::move(rw.factor);
    auto rh = solve_subproblem_H(V, res.W, res.H, cfg);
    res.H = std::move(rh.factor);
    rep.niter += rw.inner_iters + rh.inner_iters;
    rep.warnings += static_cast<int>(rw.line_search_warning) +
                    static_cast<int>(rh.line_search_warning);
    pgn = stacked_gradient_norm(V, res.W, res.H, cfg.projected_stopping);
    rep.objective_history.push_back(nmf_objective(V, res.W, res.H));
    ++t;
  }

  rep.iter = t;
  rep.pgn = pgn;
  const double vnorm2 = V.squaredNorm();
  rep.error = vnorm2 > 0.0 ? rep.objective_history.back() / vnorm2 : 0.0;
  rep.time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return res;
}

}  // namespace nmcg
