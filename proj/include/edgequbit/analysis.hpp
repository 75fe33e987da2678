// Copyright 2026 The edgequbit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "edgequbit/errors.hpp"
#include "edgequbit/exact_dynamics.hpp"

namespace edgequbit {

enum class DecayKind { kT1, kT2Star };

inline std::string decay_kind_name(DecayKind k) { return k == DecayKind::kT1 ? "T1" : "T2star"; }

struct DecayEstimate {
  double T = 0.0;
  DecayKind kind = DecayKind::kT1;
  double threshold = 0.0;
  int smoothing_window = 5;
  /// No crossing inside the grid: T is the last grid time and only a lower bound.
  bool censored = false;
};

namespace detail {

inline constexpr double kLogFloor = 1e-300;

/// Centered moving geometric mean of |v| over `window` points, truncated at
/// the ends of the series.
inline std::vector<double> geometric_smooth(const std::vector<double>& v, int window) {
  const int n = static_cast<int>(v.size());
  const int half = window / 2;
  std::vector<double> out(v.size());
  for (int i = 0; i < n; ++i) {
    const int lo = std::max(0, i - half);
    const int hi = std::min(n - 1, i + half);
    double s = 0.0;
    for (int k = lo; k <= hi; ++k) s += std::log(std::max(std::abs(v[static_cast<std::size_t>(k)]), kLogFloor));
    out[static_cast<std::size_t>(i)] = std::exp(s / (hi - lo + 1));
  }
  return out;
}

}  // namespace detail

/// First crossing of the smoothed envelope of |C(t)/C(0)| below `threshold`,
/// interpolated linearly in (ln t, ln C). The envelope at t is the largest
/// |C(t')| / C(0) over grid times t <= t' <= envelope_span * t, so an
/// oscillating signal counts as decayed only once it stays below the
/// threshold for a decade. envelope_span <= 1 smooths the raw |C| / C(0).
inline DecayEstimate extract_decay_time(const AutocorrSeries& s,
                                        double threshold = std::exp(-1.0),
                                        DecayKind kind = DecayKind::kT1, int window = 5,
                                        double envelope_span = 10.0) {
  if (s.times.empty() || s.times.size() != s.values.size()) {
    throw DomainError("extract_decay_time: empty or inconsistent series");
  }
  if (!(s.c0 > 0.0)) throw DomainError("extract_decay_time: C(0) must be positive");
  if (!(threshold > 0.0 && threshold < 1.0)) throw DomainError("threshold must lie in (0, 1)");
  if (window < 1) throw DomainError("smoothing window must be positive");
  std::vector<double> norm(s.values.size());
  for (std::size_t i = 0; i < norm.size(); ++i) norm[i] = std::abs(s.values[i]) / s.c0;
  if (envelope_span > 1.0) {
    std::vector<double> env(norm.size());
    std::size_t hi = 0;
    std::deque<std::size_t> window_max;  // indices with decreasing values
    for (std::size_t i = 0; i < norm.size(); ++i) {
      while (hi < norm.size() && s.times[hi] <= envelope_span * s.times[i]) {
        while (!window_max.empty() && norm[window_max.back()] <= norm[hi]) window_max.pop_back();
        window_max.push_back(hi++);
      }
      while (window_max.front() < i) window_max.pop_front();
      env[i] = norm[window_max.front()];
    }
    norm = std::move(env);
  }
  const std::vector<double> g = detail::geometric_smooth(norm, window);
  DecayEstimate est;
  est.kind = kind;
  est.threshold = threshold;
  est.smoothing_window = window;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] >= threshold) continue;
    if (i == 0) {
      est.T = s.times[0];
      return est;
    }
    const double la = std::log(s.times[i - 1]);
    const double lb = std::log(s.times[i]);
    const double ga = std::log(g[i - 1]);
    const double gb = std::log(g[i]);
    const double f = (std::log(threshold) - ga) / (gb - ga);
    est.T = std::exp(la + f * (lb - la));
    return est;
  }
  est.T = s.times.back();
  est.censored = true;
  return est;
}

/// Geometric mean of |C(t)| over grid times inside [t_a, t_b].
inline double detect_plateau(const AutocorrSeries& s, double t_a, double t_b) {
  double sum = 0.0;
  int n = 0;
  for (std::size_t i = 0; i < s.times.size(); ++i) {
    if (s.times[i] < t_a || s.times[i] > t_b) continue;
    sum += std::log(std::max(std::abs(s.values[i]), detail::kLogFloor));
    ++n;
  }
  if (n == 0) throw DomainError("detect_plateau: no grid points inside the window");
  return std::exp(sum / n);
}

struct ScalingPoint {
  double x = 0.0;  // J / J2
  double T = 0.0;
  bool censored = false;
};

/// ln T = slope * (J / J2) + intercept. With tau ~ (1/Gamma) (J/Gamma)^{c J / J2}
/// the slope equals c ln(J / Gamma); `c` is filled when that ratio is given.
struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  double prefactor = 0.0;
  std::optional<double> c;
  std::size_t points = 0;
};

inline ScalingFit fit_prethermal_scaling(const std::vector<ScalingPoint>& pts,
                                         std::optional<double> j_over_gamma = std::nullopt) {
  if (pts.size() < 3) throw DomainError("fit_prethermal_scaling: need at least 3 points");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].censored) {
      throw DomainError("fit_prethermal_scaling: point " + std::to_string(i) + " (J/J2 = " +
                        std::to_string(pts[i].x) + ") is censored");
    }
    if (!(pts[i].T > 0.0) || !std::isfinite(pts[i].x)) {
      throw DomainError("fit_prethermal_scaling: point " + std::to_string(i) + " is invalid");
    }
  }
  const double n = static_cast<double>(pts.size());
  double mx = 0.0, my = 0.0;
  for (const auto& p : pts) {
    mx += p.x;
    my += std::log(p.T);
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& p : pts) {
    const double dx = p.x - mx;
    const double dy = std::log(p.T) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw DomainError("fit_prethermal_scaling: all J/J2 values coincide");
  ScalingFit fit;
  fit.points = pts.size();
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.prefactor = std::exp(fit.intercept);
  fit.r2 = syy == 0.0 ? 1.0 : std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
  if (j_over_gamma) {
    if (!(*j_over_gamma > 1.0)) throw DomainError("J / Gamma must exceed 1");
    fit.c = fit.slope / std::log(*j_over_gamma);
  }
  return fit;
}

}  // namespace edgequbit
