//
// Project nmcg - Copyright 2026 the nmcg authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <iostream>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "nmcg/problems.hpp"
#include "nmcg/solver.hpp"

namespace nmcg {

enum class Metric { Iterations, FunctionEvals, GradientEvals, Time };

inline constexpr std::array<Metric, 4> kAllMetrics = {
    Metric::Iterations, Metric::FunctionEvals, Metric::GradientEvals, Metric::Time};

inline const char* to_string(Metric m) {
  switch (m) {
    case Metric::Iterations: return "iterations";
    case Metric::FunctionEvals: return "function_evals";
    case Metric::GradientEvals: return "gradient_evals";
    case Metric::Time: return "time";
  }
  return "?";
}

/// One metric over a (problem x solver) grid; failed entries are the runs
/// that did not converge and never count as solved at any ratio.
struct ProfileTable {
  std::vector<std::string> problems;          // row labels
  std::vector<std::string> solvers;           // column labels
  std::vector<std::vector<double>> metric;    // [problem][solver]
  std::vector<std::vector<char>> failed;      // [problem][solver]
};

struct RatioMatrix {
  std::vector<std::vector<double>> r;     // kept rows only; +inf where failed
  std::vector<std::size_t> kept_rows;     // indices into the source table
  std::size_t rows_dropped = 0;           // rows where every solver failed
};

/// r[k][s] = a[k][s] / (row minimum over non-failed entries). Rows where
/// every solver failed are dropped with a warning on stderr.
inline RatioMatrix performance_ratios(const ProfileTable& table) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  RatioMatrix out;
  for (std::size_t k = 0; k < table.metric.size(); ++k) {
    double best = inf;
    for (std::size_t s = 0; s < table.metric[k].size(); ++s)
      if (!table.failed[k][s]) best = std::min(best, table.metric[k][s]);
    if (best == inf) {
      std::cerr << "bench: dropping problem "
                << (k < table.problems.size() ? table.problems[k] : std::to_string(k))
                << ": every solver failed\n";
      ++out.rows_dropped;
      continue;
    }
    std::vector<double> row(table.metric[k].size());
    for (std::size_t s = 0; s < row.size(); ++s) {
      if (table.failed[k][s])
        row[s] = inf;
      else if (best > 0.0)
        row[s] = table.metric[k][s] / best;
      else  // degenerate zero-cost row: exact ties are wins
        row[s] = table.metric[k][s] == 0.0 ? 1.0 : inf;
    }
    out.r.push_back(std::move(row));
    out.kept_rows.push_back(k);
  }
  return out;
}

/// Exact breakpoints (the distinct finite ratios) merged with a uniform
/// plotting grid on [1, 10].
inline std::vector<double> default_tau_grid(const RatioMatrix& ratios) {
  std::set<double> grid;
  grid.insert(1.0);
  for (double tau = 1.25; tau <= 10.0 + 1e-12; tau += 0.25) grid.insert(tau);
  for (const auto& row : ratios.r)
    for (double v : row)
      if (std::isfinite(v)) grid.insert(v);
  return {grid.begin(), grid.end()};
}

/// p[s][t] = fraction of problems with r[k][s] <= tau_grid[t]: nondecreasing,
/// right-continuous step functions with values in [0, 1].
inline std::vector<std::vector<double>> profile(
    const std::vector<std::vector<double>>& ratios,
    const std::vector<double>& tau_grid) {
  if (tau_grid.empty() || tau_grid.front() != 1.0 ||
      !std::is_sorted(tau_grid.begin(), tau_grid.end()))
    throw std::invalid_argument("profile: tau grid must be sorted and start at 1");
  if (ratios.empty()) throw std::invalid_argument("profile: no ratio rows");

  const std::size_t n_solvers = ratios.front().size();
  const double n_problems = static_cast<double>(ratios.size());
  std::vector<std::vector<double>> p(n_solvers,
                                     std::vector<double>(tau_grid.size(), 0.0));
  for (std::size_t s = 0; s < n_solvers; ++s) {
    for (std::size_t t = 0; t < tau_grid.size(); ++t) {
      std::size_t count = 0;
      for (const auto& row : ratios)
        if (row[s] <= tau_grid[t]) ++count;
      p[s][t] = static_cast<double>(count) / n_problems;
    }
  }
  return p;
}

struct SolverSpec {
  std::string name;
  SolverConfig config;
};

struct SuiteInstance {
  std::string family;
  Index n;
};

struct SuiteOptions {
  bool sequential = false;  // single worker, for clean timing
  unsigned threads = 0;     // 0 = hardware concurrency
};

struct SuiteRun {
  std::string problem;
  Index n = 0;
  std::string solver;
  SolveStatus status = SolveStatus::NumericalError;
  int iters = 0;
  long fevals = 0;
  long gevals = 0;
  double time = 0.0;
};

struct SuiteResult {
  std::vector<SuiteRun> runs;               // problem-major, then solver
  std::map<Metric, ProfileTable> tables;
};

/// Runs every (problem, solver) pair and collects all four metrics.
/// Individual failures land in the failure masks and never abort the suite.
/// The run order over workers is arbitrary but the output order is fixed.
inline SuiteResult run_suite(const std::vector<SolverSpec>& solvers,
                             const std::vector<SuiteInstance>& instances,
                             const SuiteOptions& opt = {}) {
  if (solvers.empty() || instances.empty())
    throw std::invalid_argument("run_suite: empty solver or instance list");

  SuiteResult result;
  result.runs.resize(instances.size() * solvers.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < result.runs.size();) {
      const auto& inst = instances[i / solvers.size()];
      const auto& spec = solvers[i % solvers.size()];
      const Problem problem = make_problem(inst.family, inst.n);
      const SolverReport rep = minimize(problem, problem.initial_point, spec.config);
      result.runs[i] = {inst.family,       inst.n,
                        spec.name,         rep.status,
                        rep.iterations,    rep.counters.function_evals,
                        rep.counters.gradient_evals, rep.wall_time};
    }
  };

  unsigned n_threads = opt.sequential ? 1
                       : (opt.threads ? opt.threads
                                      : std::max(1u, std::thread::hardware_concurrency()));
  n_threads = std::min<std::size_t>(n_threads, result.runs.size());
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (Metric m : kAllMetrics) {
    ProfileTable table;
    table.solvers.reserve(solvers.size());
    for (const auto& s : solvers) table.solvers.push_back(s.name);
    for (std::size_t k = 0; k < instances.size(); ++k) {
      table.problems.push_back(instances[k].family + "_" +
                               std::to_string(instances[k].n));
      std::vector<double> row(solvers.size());
      std::vector<char> fail(solvers.size());
      for (std::size_t s = 0; s < solvers.size(); ++s) {
        const SuiteRun& run = result.runs[k * solvers.size() + s];
        switch (m) {
          case Metric::Iterations: row[s] = run.iters; break;
          case Metric::FunctionEvals: row[s] = static_cast<double>(run.fevals); break;
          case Metric::GradientEvals: row[s] = static_cast<double>(run.gevals); break;
          case Metric::Time: row[s] = run.time; break;
        }
        fail[s] = run.status != SolveStatus::Converged;
      }
      table.metric.push_back(std::move(row));
      table.failed.push_back(std::move(fail));
    }
    result.tables.emplace(m, std::move(table));
  }
  return result;
}

}  // namespace nmcg
