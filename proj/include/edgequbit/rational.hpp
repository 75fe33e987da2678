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

#include <boost/multiprecision/cpp_int.hpp>

#include "edgequbit/operator_sum.hpp"

namespace edgequbit {

/// Arbitrary-precision rational; the exact coefficient ring.
using Rational = boost::multiprecision::cpp_rational;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool kComplex = false;
  static constexpr bool kExact = true;
  static constexpr double kDefaultPruneTol = 0.0;
  static Rational conj(const Rational& v) { return v; }
  static double magnitude(const Rational& v) { return std::abs(static_cast<double>(v)); }
  static bool is_zero(const Rational& v, double) { return v == 0; }
  static Rational from_phase(Phase p) {
    if (phase_power(p) & 1) throw DomainError("imaginary phase in a rational OperatorSum");
    return p == Phase::kOne ? Rational(1) : Rational(-1);
  }
  static Complex to_complex(const Rational& v) { return {static_cast<double>(v), 0.0}; }
};

/// Exact binary value of a double as a rational.
inline Rational exact_rational(double v) { return Rational(v); }

inline OperatorSum<double> to_double(const OperatorSum<Rational>& op) {
  return op.transform<double>([](const Rational& c) { return static_cast<double>(c); });
}

}  // namespace edgequbit
