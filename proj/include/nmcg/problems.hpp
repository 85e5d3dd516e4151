//
// Project nmcg - Copyright 2026 the nmcg authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nmcg/problem.hpp"

// Standard unconstrained test families with analytic gradients and the
// collection's customary starting points. Formulas follow the Andrei test
// collection (extended = block-separable pairs; generalized = chained
// overlapping terms); fig1_demo is the shifted separable quadratic used as
// the demonstration problem.

namespace nmcg {

struct ProblemFamily {
  std::string name;
  std::string dims;     // human-readable dimension rule
  std::string optimum;  // closed form of the known optimum ("" when unknown)
  std::function<bool(Index)> dim_ok;
  std::function<Problem(Index)> make;
};

namespace families {

inline bool any_dim(Index n) { return n >= 1; }
inline bool chained_dim(Index n) { return n >= 2; }
inline bool paired_dim(Index n) { return n >= 2 && n % 2 == 0; }

// (x0 - 5)^2 + sum_{i>=1} (x_i - 1)^2; minimum 0 at (5, 1, ..., 1).
inline Problem fig1_demo(Index n) {
  Problem p;
  p.name = "fig1_demo";
  p.dimension = n;
  p.value = [](const Vector& x) {
    const double head = x(0) - 5.0;
    return head * head + (x.tail(x.size() - 1).array() - 1.0).square().sum();
  };
  p.gradient = [](const Vector& x) {
    Vector g(x.size());
    g(0) = 2.0 * (x(0) - 5.0);
    g.tail(x.size() - 1) = 2.0 * (x.tail(x.size() - 1).array() - 1.0);
    return g;
  };
  p.initial_point = Vector::Zero(n);
  p.known_optimum = 0.0;
  return p;
}

// Pairs: 100 (x_{2i+1} - x_{2i}^2)^2 + (1 - x_{2i})^2, start (-1.2, 1, ...).
inline Problem extended_rosenbrock(Index n) {
  Problem p;
  p.name = "extended_rosenbrock";
  p.dimension = n;
  p.value = [](const Vector& x) {
    double v = 0.0;
    for (Index i = 0; i + 1 < x.size(); i += 2) {
      const double a = x(i + 1) - x(i) * x(i);
      const double b = 1.0 - x(i);
      v += 100.0 * a * a + b * b;
    }
    return v;
  };
  p.gradient = [](const Vector& x) {
    Vector g(x.size());
    for (Index i = 0; i + 1 < x.size(); i += 2) {
      const double a = x(i + 1) - x(i) * x(i);
      g(i) = -400.0 * x(i) * a - 2.0 * (1.0 - x(i));
      g(i + 1) = 200.0 * a;
    }
    return g;
  };
  p.initial_point = Vector(n);
  for (Index i = 0; i < n; i += 2) {
    p.initial_point(i) = -1.2;
    p.initial_point(i + 1) = 1.0;
  }
  p.known_optimum = 0.0;
  return p;
}

// Rosenbrock variant with a cubic coupling: 100 (x_{2i+1} - x_{2i}^3)^2 +
// (1 - x_{2i})^2, start (-1.2, 1, ...).
inline Problem extended_white_holst(Index n) {
  Problem p;
  p.name = "extended_white_holst";
  p.dimension = n;
  p.value = [](const Vector& x) {
    double v = 0.0;
    for (Index i = 0; i + 1 < x.size(); i += 2) {
      const double a = x(i + 1) - x(i) * x(i) * x(i);
      const double b = 1.0 - x(i);
      v += 100.0 * a * a + b * b;
    }
    return v;
  };
  p.gradient = [](const Vector& x) {
    Vector g(x.size());
    for (Index i = 0; i + 1 < x.size(); i += 2) {
      const double a = x(i + 1) - x(i) * x(i) * x(i);
      g(i) = -600.0 * x(i) * x(i) * a - 2.0 * (1.0 - x(i));
      g(i + 1) = 200.0 * a;
    }
    return g;
  };
  p.initial_point = Vector(n);
  for (Index i = 0; i < n; i += 2) {
    p.initial_point(i) = -1.2;
    p.initial_point(i + 1) = 1.0;
  }
  p.known_optimum = 0.0;
  return p;
}

// Pairs (u, v): (1.5 - u(1-v))^2 + (2.25 - u(1-v^2))^2 + (2.625 - u(1-v^3))^2,
// start (1, 0.8, ...), minimum 0 at u = 3, v = 0.5.
inline Problem extended_beale(Index n) {
  Problem p;
  p.name = "extended_beale";
  p.dimension = n;
  p.value = [](const Vector& x) {
    double v = 0.0;
    for (Index i = 0; i + 1 < x.size(); i += 2) {
      const double u = x(i), w = x(i + 1);
      const double r1 = 1.5 - u * (1.0 - w);
      const double r2 = 2.25 - u * (1.0 - w * w);
      const double r3 = 2.625 - u * (1.0 - w * w * w);
      v += r1 * r1 + r2 * r2 + r3 * r3;
    }
    return v;
  };
  p.gradient = [](const Vector& x) {
    Vector g(x.size());
    for (Index i = 0; i + 1 < x.size(); i += 2) {
      const double u = x(i), w = x(i + 1);
      const double r1 = 1.5 - u * (1.0 - w);
      const double r2 = 2.25 - u * (1.0 - w * w);
      const double r3 = 2.625 - u * (1.0 - w * w * w);
      g(i) = -2.0 * (r1 * (1.0 - w) + r2 * (1.0 - w * w) + r3 * (1.0 - w * w * w));
      g(i + 1) = 2.0 * u * (r1 + 2.0 * w * r2 + 3.0 * w * w * r3);
    }
    return g;
  };
  p.initial_point = Vector(n);
  for (Index i = 0; i < n; i += 2) {
    p.initial_point(i) = 1.0;
    p.initial_point(i + 1) = 0.8;
  }
  p.known_optimum = 0.0;
  return p;
}

// sum_i (i/10)(exp(x_i) - x_i), start at ones; minimum n(n+1)/20 at x = 0.
inline Problem raydan1(Index n) {
  Problem p;
  p.name = "raydan1";
  p.dimension = n;
  p.value = [](const Vector& x) {
    double v = 0.0;
    for (Index i = 0; i < x.size(); ++i)
      v += (static_cast<double>(i + 1) / 10.0) * (std::exp(x(i)) - x(i));
    return v;
  };
  p.gradient = [](const Vector& x) {
    Vector g(x.size());
    for (Index i = 0; i < x.size(); ++i)
      g(i) = (static_cast<double>(i + 1) / 10.0) * (std::exp(x(i)) - 1.0);
    return g;
  };
  p.initial_point = Vector::Ones(n);
  p.known_optimum = static_cast<double>(n) * static_cast<double>(n + 1) / 20.0;
  return p;
}

// sum_i (exp(x_i) - i x_i), start at (1/n) ones; minimizer x_i = ln i with
// value sum_i (i - i ln i).
inline Problem diagonal1(Index n) {
  Problem p;
  p.name = "diagonal1";
  p.dimension = n;
  p.value = [](const Vector& x) {
    double v = 0.0;
    for (Index i = 0; i < x.size(); ++i)
      v += std::exp(x(i)) - static_cast<double>(i + 1) * x(i);
    return v;
  };
  p.gradient = [](const Vector& x) {
    Vector g(x.size());
    for (Index i = 0; i < x.size(); ++i)
      g(i) = std::exp(x(i)) - static_cast<double>(i + 1);
    return g;
  };
  p.initial_point = Vector::Constant(n, 1.0 / static_cast<double>(n));
  double opt = 0.0;
  for (Index i = 1; i <= n; ++i) {
    const double di = static_cast<double>(i);
    opt += di - di * std::log(di);
  }
  p.known_optimum = opt;
  return p;
}

// Pairs: (u + v - 3)^2 + (u - v + 1)^4, start (2, ..., 2); minimum 0 at
// (1, 2) per pair.
inline Problem extended_tridiagonal1(Index n) {
  Problem p;
  p.name = "extended_tridiagonal1";
  p.dimension = n;
  p.value = [](const Vector& x) {
    double v = 0.0;
    for (Index i = 0; i + 1 < x.size(); i += 2) {
      const double t1 = x(i) + x(i + 1) - 3.0;
      const double t2 = x(i) - x(i + 1) + 1.0;
      v += t1 * t1 + t2 * t2 * t2 * t2;
    }
    return v;
  };
  p.gradient = [](const Vector& x) {
    Vector g(x.size());
    for (Index i = 0; i + 1 < x.size(); i += 2) {
      const double t1 = x(i) + x(i + 1) - 3.0;
      const double t2 = x(i) - x(i + 1) + 1.0;
      const double cube = 4.0 * t2 * t2 * t2;
      g(i) = 2.0 * t1 + cube;
      g(i + 1) = 2.0 * t1 - cube;
    }
    return g;
  };
  p.initial_point = Vector::Constant(n, 2.0);
  p.known_optimum = 0.0;
  return p;
}

// Chained quartic: sum_{i<n-1} [x_i^2 + (x_{i+1} + x_i^2)^2], start at ones;
// minimum 0 at the origin.
inline Problem generalized_quadratic(Index n) {
  Problem p;
  p.name = "generalized_quadratic";
  p.dimension = n;
  p.value = [](const Vector& x) {
    double v = 0.0;
    for (Index i = 0; i + 1 < x.size(); ++i) {
      const double t = x(i + 1) + x(i) * x(i);
      v += x(i) * x(i) + t * t;
    }
    return v;
  };
  p.gradient = [](const Vector& x) {
    Vector g = Vector::Zero(x.size());
    for (Index i = 0; i + 1 < x.size(); ++i) {
      const double t = x(i + 1) + x(i) * x(i);
      g(i) += 2.0 * x(i) + 4.0 * t * x(i);
      g(i + 1) += 2.0 * t;
    }
    return g;
  };
  p.initial_point = Vector::Ones(n);
  p.known_optimum = 0.0;
  return p;
}

// sum_i i x_i^2 + (sum_i x_i)^2 / 100, start at 0.5 ones; minimum 0 at the
// origin.
inline Problem perturbed_quadratic(Index n) {
  Problem p;
  p.name = "perturbed_quadratic";
  p.dimension = n;
  p.value = [](const Vector& x) {
    double v = 0.0;
    for (Index i = 0; i < x.size(); ++i)
      v += static_cast<double>(i + 1) * x(i) * x(i);
    const double s = x.sum();
    return v + s * s / 100.0;
  };
  p.gradient = [](const Vector& x) {
    const double s = x.sum();
    Vector g(x.size());
    for (Index i = 0; i < x.size(); ++i)
      g(i) = 2.0 * static_cast<double>(i + 1) * x(i) + 2.0 * s / 100.0;
    return g;
  };
  p.initial_point = Vector::Constant(n, 0.5);
  p.known_optimum = 0.0;
  return p;
}

// Pairs: (u^2 + v - 11)^2 + (u + v^2 - 7)^2, start (1, 1, ...); minimum 0.
inline Problem extended_himmelblau(Index n) {
  Problem p;
  p.name = "extended_himmelblau";
  p.dimension = n;
  p.value = [](const Vector& x) {
    double v = 0.0;
    for (Index i = 0; i + 1 < x.size(); i += 2) {
      const double t1 = x(i) * x(i) + x(i + 1) - 11.0;
      const double t2 = x(i) + x(i + 1) * x(i + 1) - 7.0;
      v += t1 * t1 + t2 * t2;
    }
    return v;
  };
  p.gradient = [](const Vector& x) {
    Vector g(x.size());
    for (Index i = 0; i + 1 < x.size(); i += 2) {
      const double t1 = x(i) * x(i) + x(i + 1) - 11.0;
      const double t2 = x(i) + x(i + 1) * x(i + 1) - 7.0;
      g(i) = 4.0 * x(i) * t1 + 2.0 * t2;
      g(i + 1) = 2.0 * t1 + 4.0 * x(i + 1) * t2;
    }
    return g;
  };
  p.initial_point = Vector::Ones(n);
  p.known_optimum = 0.0;
  return p;
}

// Chained banana: sum_{i<n-1} 100 (x_{i+1} - x_i + 1 - x_i^2)^2, start at
// the origin; minimum 0.
inline Problem fletchcr(Index n) {
  Problem p;
  p.name = "fletchcr";
  p.dimension = n;
  p.value = [](const Vector& x) {
    double v = 0.0;
    for (Index i = 0; i + 1 < x.size(); ++i) {
      const double r = x(i + 1) - x(i) + 1.0 - x(i) * x(i);
      v += 100.0 * r * r;
    }
    return v;
  };
  p.gradient = [](const Vector& x) {
    Vector g = Vector::Zero(x.size());
    for (Index i = 0; i + 1 < x.size(); ++i) {
      const double r = x(i + 1) - x(i) + 1.0 - x(i) * x(i);
      g(i) += 200.0 * r * (-1.0 - 2.0 * x(i));
      g(i + 1) += 200.0 * r;
    }
    return g;
  };
  p.initial_point = Vector::Zero(n);
  p.known_optimum = 0.0;
  return p;
}

// (1/2) sum_i i x_i^2 - x_n, start at 0.5 ones; minimum -1/(2n) at
// x = (0, ..., 0, 1/n). The Hessian is diag(1..n), so the gradient has
// Lipschitz constant exactly n.
inline Problem quadratic_qf1(Index n) {
  Problem p;
  p.name = "quadratic_qf1";
  p.dimension = n;
  p.value = [](const Vector& x) {
    double v = 0.0;
    for (Index i = 0; i < x.size(); ++i)
      v += 0.5 * static_cast<double>(i + 1) * x(i) * x(i);
    return v - x(x.size() - 1);
  };
  p.gradient = [](const Vector& x) {
    Vector g(x.size());
    for (Index i = 0; i < x.size(); ++i)
      g(i) = static_cast<double>(i + 1) * x(i);
    g(x.size() - 1) -= 1.0;
    return g;
  };
  p.initial_point = Vector::Constant(n, 0.5);
  p.known_optimum = -0.5 / static_cast<double>(n);
  return p;
}

}  // namespace families

inline const std::vector<ProblemFamily>& problem_families() {
  static const std::vector<ProblemFamily> table = {
      {"fig1_demo", "n >= 1", "0", families::any_dim, families::fig1_demo},
      {"extended_rosenbrock", "even n >= 2", "0", families::paired_dim,
       families::extended_rosenbrock},
      {"extended_white_holst", "even n >= 2", "0", families::paired_dim,
       families::extended_white_holst},
      {"extended_beale", "even n >= 2", "0", families::paired_dim,
       families::extended_beale},
      {"raydan1", "n >= 1", "n(n+1)/20", families::any_dim, families::raydan1},
      {"diagonal1", "n >= 1", "sum_i (i - i ln i)", families::any_dim,
       families::diagonal1},
      {"extended_tridiagonal1", "even n >= 2", "0", families::paired_dim,
       families::extended_tridiagonal1},
      {"generalized_quadratic", "n >= 2", "0", families::chained_dim,
       families::generalized_quadratic},
      {"perturbed_quadratic", "n >= 1", "0", families::any_dim,
       families::perturbed_quadratic},
      {"extended_himmelblau", "even n >= 2", "0", families::paired_dim,
       families::extended_himmelblau},
      {"fletchcr", "n >= 2", "0", families::chained_dim, families::fletchcr},
      {"quadratic_qf1", "n >= 1", "-1/(2n)", families::any_dim,
       families::quadratic_qf1},
  };
  return table;
}

inline Problem make_problem(const std::string& name, Index n) {
  for (const auto& fam : problem_families()) {
    if (fam.name != name) continue;
    if (!fam.dim_ok(n))
      throw std::invalid_argument("make_problem: dimension " + std::to_string(n) +
                                  " invalid for " + name + " (" + fam.dims + ")");
    return fam.make(n);
  }
  std::string known;
  for (const auto& fam : problem_families()) {
    if (!known.empty()) known += ", ";
    known += fam.name;
  }
  throw std::invalid_argument("make_problem: unknown problem '" + name +
                              "' (known: " + known + ")");
}

}  // namespace nmcg
