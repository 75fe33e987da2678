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

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <string>

#include "edgequbit/errors.hpp"
#include "edgequbit/operator_sum.hpp"

namespace edgequbit {

inline constexpr int kDefaultMaxDenseL = 14;

/// Basis convention: bit i-1 of a basis index is the Z eigenvalue of site i
/// (0 -> +1, 1 -> -1), so X^x Z^z |s> = (-1)^{|z & s|} |s ^ x>.
namespace detail {

inline void check_dense_size(int L, int max_L) {
  if (L > max_L) {
    throw SizeError("dense realization limited to L <= " + std::to_string(max_L) + ", got " +
                    std::to_string(L));
  }
}

}  // namespace detail

/// True when every coefficient is real, i.e. the dense matrix is real.
template <class S>
bool has_real_matrix(const OperatorSum<S>& op, double tol = 0.0) {
  if constexpr (!ScalarTraits<S>::kComplex) {
    return true;
  } else {
    for (const auto& [k, c] : op) {
      if (std::abs(c.imag()) > tol) return false;
    }
    return true;
  }
}

/// 2^L x 2^L complex matrix of the operator.
template <class S>
Eigen::MatrixXcd to_dense(const OperatorSum<S>& op, int max_L = kDefaultMaxDenseL) {
  detail::check_dense_size(op.n_sites(), max_L);
  const std::size_t dim = std::size_t{1} << op.n_sites();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [k, c] : op) {
    const Complex cc = ScalarTraits<S>::to_complex(c);
    for (std::size_t s = 0; s < dim; ++s) {
      const double sign = parity(k.z & s) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(s ^ k.x), static_cast<Eigen::Index>(s)) += sign * cc;
    }
  }
  return m;
}

/// Real matrix of an operator with real coefficients (all model Hamiltonians).
template <class S>
Eigen::MatrixXd to_dense_real(const OperatorSum<S>& op, int max_L = kDefaultMaxDenseL) {
  detail::check_dense_size(op.n_sites(), max_L);
  if (!has_real_matrix(op)) throw DomainError("to_dense_real: operator has complex coefficients");
  const std::size_t dim = std::size_t{1} << op.n_sites();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& [k, c] : op) {
    const double cc = ScalarTraits<S>::to_complex(c).real();
    for (std::size_t s = 0; s < dim; ++s) {
      const double sign = parity(k.z & s) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(s ^ k.x), static_cast<Eigen::Index>(s)) += sign * cc;
    }
  }
  return m;
}

inline Eigen::MatrixXcd to_dense(const PauliString& p, int max_L = kDefaultMaxDenseL) {
  return to_dense(OperatorSum<Complex>(p), max_L);
}

}  // namespace edgequbit
