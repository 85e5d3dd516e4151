//
// Project nmcg - Copyright 2026 the nmcg authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nmcg {

/// Gradient-driven non-monotone parameter
///   eta = 0.95 sin(pi ||g|| / (1 + 2||g||)) + 0.01,
/// which increases from 0.01 at a stationary point toward 0.96 for large
/// gradients: the acceptance rule is almost max-type far from a minimizer
/// and almost monotone near one.
inline double eta_trig(double gradient_norm) {
  const double arg =
      std::numbers::pi * gradient_norm / (1.0 + 2.0 * gradient_norm);
  return 0.95 * std::sin(arg) + 0.01;
}

/// eta_k = (1/3) eta0 (-1/2)^k + (2/3) eta0. With eta0 = 0.15 the sequence
/// oscillates into its limit 0.1 within a few iterations.
inline double eta_ahookhosh(int k, double eta0 = 0.15) {
  return eta0 / 3.0 * std::pow(-0.5, k) + 2.0 / 3.0 * eta0;
}

/// Amini-type update: geometric decay floored at 0.5 while the gradient is
/// large, contraction toward 0.03 once ||g||_inf drops below 1e-3. The
/// first call takes eta_prev = 0.95.
inline double eta_amini(double eta_prev, double gradient_inf_norm) {
  if (gradient_inf_norm <= 1e-3) return 2.0 / 3.0 * eta_prev + 0.01;
  return std::max(0.99 * eta_prev, 0.5);
}

enum class EtaScheme { Trig, Ahookhosh, Amini };

inline const char* to_string(EtaScheme s) {
  switch (s) {
    case EtaScheme::Trig: return "trig";
    case EtaScheme::Ahookhosh: return "ahookhosh";
    case EtaScheme::Amini: return "amini";
  }
  return "?";
}

inline EtaScheme parse_eta_scheme(std::string_view name) {
  if (name == "trig") return EtaScheme::Trig;
  if (name == "ahookhosh") return EtaScheme::Ahookhosh;
  if (name == "amini") return EtaScheme::Amini;
  throw std::invalid_argument("unknown eta scheme '" + std::string(name) +
                              "' (expected trig|ahookhosh|amini)");
}

/// Sliding window of the most recent objective values realizing
///   f_lk = max_{0<=j<=m} f_{k-j},  m_0 = 0,  m_k = min(m_{k-1}+1, N),
/// together with the weight eta used to blend the window maximum with the
/// current value. The window never stores more than N+1 values.
class NonmonotoneMemory {
 public:
  NonmonotoneMemory(int cap, double f0, double eta0) : cap_(cap), eta_(eta0) {
    if (cap < 0) throw std::invalid_argument("NonmonotoneMemory: N must be >= 0");
    window_.push_back(f0);
    f_lk_ = f0;
  }

  /// Appends the newest objective value and advances the window extent.
  void push(double f_new) {
    window_.push_back(f_new);
    if (static_cast<int>(window_.size()) > cap_ + 1) window_.pop_front();
    m_ = std::min(m_ + 1, cap_);
    f_lk_ = *std::max_element(window_.end() - (m_ + 1), window_.end());
  }

  /// R_k = eta f_lk + (1 - eta) f_k, where f_k is the newest window member;
  /// always lies in [f_k, f_lk].
  double reference_value(double f_k) const {
    return eta_ * f_lk_ + (1.0 - eta_) * f_k;
  }

  double window_max() const { return f_lk_; }  // f_lk
  int extent() const { return m_; }            // m_k
  int cap() const { return cap_; }             // N
  double eta() const { return eta_; }
  void set_eta(double eta) { eta_ = eta; }

 private:
  std::deque<double> window_;  // most recent value last
  int m_ = 0;
  int cap_;
  double f_lk_;
  double eta_;
};

}  // namespace nmcg
