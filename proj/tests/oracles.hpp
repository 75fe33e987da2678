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

// Reference constructions shared by the test suites. Everything here is built
// from 2x2 matrices and Kronecker products, independent of the library's
// bit-mask arithmetic.

#pragma once

#include <complex>
#include <random>
#include <string>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;

inline Eigen::Matrix2cd pauli(char op) {
  Eigen::Matrix2cd m;
  switch (op) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, C(0, -1), C(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("bad Pauli letter");
  }
  return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// `letters[k]` acts on site k + 1. Site 1 is the least significant bit of
/// the basis index, so it is the rightmost Kronecker factor.
inline Eigen::MatrixXcd string_matrix(const std::string& letters) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (char c : letters) m = kron(pauli(c), m);
  return m;
}

/// Single-site operator `op` at `site` (1-based) on L sites.
inline Eigen::MatrixXcd site_op(int L, int site, char op) {
  std::string s(static_cast<std::size_t>(L), 'I');
  s[static_cast<std::size_t>(site - 1)] = op;
  return string_matrix(s);
}

inline std::string random_letters(std::mt19937_64& rng, int L) {
  static const char kLetters[] = {'I', 'X', 'Y', 'Z'};
  std::uniform_int_distribution<int> d(0, 3);
  std::string s;
  for (int i = 0; i < L; ++i) s += kLetters[d(rng)];
  return s;
}

/// Tr(A(t) A) / 2^L from a full dense eigendecomposition.
inline double autocorrelation(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& a, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  const Eigen::MatrixXcd& v = es.eigenvectors();
  Eigen::VectorXcd phases = (C(0, 1) * t * es.eigenvalues().cast<C>()).array().exp();
  Eigen::MatrixXcd u = v * phases.asDiagonal() * v.adjoint();
  Eigen::MatrixXcd at = u * a * u.adjoint();
  return (at * a).trace().real() / static_cast<double>(h.rows());
}

}  // namespace oracle
