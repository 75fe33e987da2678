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

#include <cmath>
#include <numbers>
#include <string>

#include "edgequbit/errors.hpp"

namespace edgequbit {

inline constexpr double kBesselMaxArgument = 1e3;

/// Bessel function of the first kind, order zero.
///
/// Power series (summed in long double) for |x| < 12, Hankel asymptotic
/// expansion beyond, truncated at its smallest term. Absolute error stays
/// below 1e-10 on the supported range |x| <= 1e3.
inline double bessel_j0(double x) {
  if (!std::isfinite(x) || std::abs(x) > kBesselMaxArgument) {
    throw DomainError("bessel_j0: argument outside [-1e3, 1e3]: " + std::to_string(x));
  }
  x = std::abs(x);
  if (x < 12.0) {
    long double q = static_cast<long double>(x) * x / 4.0L;
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k < 200; ++k) {
      term *= -q / (static_cast<long double>(k) * k);
      sum += term;
      if (std::abs(term) < 1e-22L) break;
    }
    return static_cast<double>(sum);
  }
  // a_k = prod_{j=1..k} (-(2j-1)^2) / (k! 8^k); P takes even k, Q odd k.
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double prev = 1.0;
  for (int k = 1; k < 200; ++k) {
    double odd = 2.0 * k - 1.0;
    term *= -odd * odd / (k * 8.0 * x);
    if (std::abs(term) > std::abs(prev)) break;
    // Signs: P = sum (-1)^m a_{2m} x^-2m, Q = sum (-1)^m a_{2m+1} x^-(2m+1).
    int m = k / 2;
    double signed_term = (m % 2 == 0) ? term : -term;
    if (k % 2 == 0) {
      p += signed_term;
    } else {
      q += signed_term;
    }
    prev = term;
    if (std::abs(term) < 1e-17) break;
  }
  double chi = x - std::numbers::pi / 4.0;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace edgequbit
