//
// Project nmcg - Copyright 2026 the nmcg authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nmcg/bench.hpp"
#include "nmcg/nmf.hpp"
#include "nmcg/solver.hpp"

namespace nmcg {

/// Round-trip-exact decimal rendering (shortest is not needed; stability is).
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  return out;
}

/// Per-iteration trace: k,f,gnorm,alpha,eta,beta,flk,Rk. The final row is
/// the terminal iterate (alpha = beta = 0).
inline void write_trace_csv(const SolverReport& report, const std::string& path) {
  auto out = open_output(path);
  out << "k,f,gnorm,alpha,eta,beta,flk,Rk\n";
  for (const TraceRecord& r : report.trace)
    out << r.k << ',' << format_double(r.f) << ',' << format_double(r.gnorm) << ','
        << format_double(r.alpha) << ',' << format_double(r.eta) << ','
        << format_double(r.beta) << ',' << format_double(r.flk) << ','
        << format_double(r.Rk) << '\n';
}

/// Per-run results: problem,n,solver,status,iters,fevals,gevals,time.
inline void write_runs_csv(const SuiteResult& result, const std::string& path) {
  auto out = open_output(path);
  out << "problem,n,solver,status,iters,fevals,gevals,time\n";
  for (const SuiteRun& r : result.runs)
    out << r.problem << ',' << r.n << ',' << r.solver << ',' << to_string(r.status)
        << ',' << r.iters << ',' << r.fevals << ',' << r.gevals << ','
        << format_double(r.time) << '\n';
}

/// Step functions for every requested metric: metric,solver,tau,p.
inline void write_profiles_csv(const SuiteResult& result,
                               const std::vector<Metric>& metrics,
                               const std::string& path) {
  auto out = open_output(path);
  out << "metric,solver,tau,p\n";
  for (Metric m : metrics) {
    const ProfileTable& table = result.tables.at(m);
    const RatioMatrix ratios = performance_ratios(table);
    if (ratios.r.empty()) continue;
    const std::vector<double> grid = default_tau_grid(ratios);
    const auto p = profile(ratios.r, grid);
    for (std::size_t s = 0; s < table.solvers.size(); ++s)
      for (std::size_t t = 0; t < grid.size(); ++t)
        out << to_string(m) << ',' << table.solvers[s] << ','
            << format_double(grid[t]) << ',' << format_double(p[s][t]) << '\n';
  }
}

/// Factorization reports: m,n,k,seed,iter,niter,pgn,time,error,algorithm.
struct NmfCsvRow {
  Index m = 0, n = 0;
  int k = 0;
  unsigned long seed = 0;
  NmfReport report;
  std::string algorithm;
};

inline void write_nmf_csv(const std::vector<NmfCsvRow>& rows,
                          const std::string& path) {
  auto out = open_output(path);
  out << "m,n,k,seed,iter,niter,pgn,time,error,algorithm\n";
  for (const NmfCsvRow& r : rows)
    out << r.m << ',' << r.n << ',' << r.k << ',' << r.seed << ',' << r.report.iter
        << ',' << r.report.niter << ',' << format_double(r.report.pgn) << ','
        << format_double(r.report.time) << ',' << format_double(r.report.error)
        << ',' << r.algorithm << '\n';
}

/// Reads a dense matrix from comma-separated rows. Blank lines are skipped;
/// every row must have the same number of fields.
inline RowMatrix read_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) row.push_back(std::stod(field));
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::runtime_error("ragged rows in " + path);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("empty matrix in " + path);
  RowMatrix m(rows.size(), rows.front().size());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

}  // namespace nmcg
