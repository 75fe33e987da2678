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
#include <string>

#include "edgequbit/errors.hpp"
#include "edgequbit/models.hpp"
#include "edgequbit/operator_sum.hpp"
#include "edgequbit/pauli.hpp"

namespace edgequbit {

/// Chain of L = 2M sites on which the SPT <-> coupled-Ising duality acts.
///
/// The duality is conjugation by U = V W with
///   W = prod_{j in S} (-X_{2j}),  S = { j : M - j odd },
///   V = prod_j (-X_{2j-1} P_j + (1 - P_j)),  P_j = (1 - prod_{i<j} X_{2i}) / 2.
/// On generators it acts as
///   X_i      -> X_i
///   Z_{2j-1} -> L_j Z_{2j-1},   L_j = prod_{k<j} X_{2k}
///   Z_{2j}   -> Z_{2j} R_j,     R_j = prod_{k>j} X_{2k-1}
/// For even M the set S is the odd j; picking S by the parity of M - j keeps
/// the even-site images sign free for every chain length.
class DualityContext {
 public:
  explicit DualityContext(int L) : L_(L), M_(L / 2) {
    if (L < 4 || L % 2 != 0 || L > kMaxSites) {
      throw DimensionError("duality requires even L in [4, 64], got " + std::to_string(L));
    }
  }

  int L() const { return L_; }
  int M() const { return M_; }

  /// L_j = prod_{k<j} X_{2k}, measuring even-sublattice parity left of cell j.
  Mask left_string(int j) const {
    Mask m = 0;
    for (int k = 1; k < j; ++k) m |= site_bit(2 * k);
    return m;
  }

  /// R_j = prod_{k>j} X_{2k-1}, measuring odd-sublattice parity right of cell j.
  Mask right_string(int j) const {
    Mask m = 0;
    for (int k = j + 1; k <= M_; ++k) m |= site_bit(2 * k - 1);
    return m;
  }

  /// Cells j whose factor -X_{2j} enters W.
  bool in_w(int j) const { return (M_ - j) % 2 == 1; }

  /// Image of Z at `site` as a Pauli string.
  PauliString image_of_z(int site) const {
    if (site % 2 == 1) {
      int j = (site + 1) / 2;
      return PauliString(L_, left_string(j), site_bit(site));
    }
    int j = site / 2;
    return PauliString(L_, right_string(j), site_bit(site));
  }

 private:
  int L_;
  int M_;
};

/// Image of a single Pauli string, i^k X^x Z^z -> i^k X^x prod_{i in z} U^dag Z_i U.
inline PauliString dualize(const PauliString& p, const DualityContext& ctx) {
  if (p.n_sites() != ctx.L()) throw DimensionError("dualize: length mismatch");
  PauliString out(ctx.L(), p.x_mask(), 0, p.phase());
  for (Mask z = p.z_mask(); z != 0; z &= z - 1) {
    out = out * ctx.image_of_z(std::countr_zero(z) + 1);
  }
  return out;
}

/// Applies the duality term by term. Operators even under both G_e and G_o
/// map to local operators; other inputs keep their attached strings unless
/// `reject_non_symmetric` is set, in which case they raise DomainError.
template <class S>
OperatorSum<S> dualize(const OperatorSum<S>& op, const DualityContext& ctx,
                       bool reject_non_symmetric = false) {
  op.check_same_length(ctx.L(), "dualize");
  if (reject_non_symmetric) {
    const SymmetryOperators g = symmetry_operators(ctx.L());
    if (!is_symmetric(op, g.g_even) || !is_symmetric(op, g.g_odd)) {
      throw DomainError("dualize: operator is not even under both G_e and G_o");
    }
  }
  OperatorSum<S> out(op.n_sites(), op.prune_tolerance());
  for (const auto& [k, c] : op) {
    PauliString img = dualize(PauliString(ctx.L(), k.x, k.z), ctx);
    out.add(img.key(), img.phase() == Phase::kOne ? c : S(-c));
  }
  return out;
}

inline constexpr int kMaxDenseDualityL = 10;

/// Dense U in the computational (Z) basis; oracle for dualize. U is diagonal
/// in the X basis with entries +-1, so U_{s,s'} depends only on s ^ s'.
inline Eigen::MatrixXd dense_duality_unitary(const DualityContext& ctx) {
  if (ctx.L() > kMaxDenseDualityL) {
    throw SizeError("dense_duality_unitary supports L <= 10, got " + std::to_string(ctx.L()));
  }
  const int L = ctx.L();
  const int M = ctx.M();
  const std::size_t dim = std::size_t{1} << L;
  // Diagonal entries: bit i-1 of e set means X_i = -1.
  Eigen::VectorXd diag(dim);
  for (std::size_t e = 0; e < dim; ++e) {
    auto x_val = [&](int site) { return (e >> (site - 1)) & 1 ? -1.0 : 1.0; };
    double w = 1.0;
    for (int j = 1; j <= M; ++j) {
      if (ctx.in_w(j)) w *= -x_val(2 * j);
    }
    double v = 1.0;
    double left_parity = 1.0;
    for (int j = 1; j <= M; ++j) {
      // P_j = (1 - prod_{i<j} X_{2i}) / 2 is 1 exactly when the parity is -1.
      if (left_parity < 0) v *= -x_val(2 * j - 1);
      left_parity *= x_val(2 * j);
    }
    diag[static_cast<Eigen::Index>(e)] = v * w;
  }
  // u(d) = 2^-L sum_e diag(e) (-1)^{e.d}  (fast Walsh-Hadamard transform).
  Eigen::VectorXd u = diag;
  for (std::size_t h = 1; h < dim; h <<= 1) {
    for (std::size_t i = 0; i < dim; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        double a = u[static_cast<Eigen::Index>(j)];
        double b = u[static_cast<Eigen::Index>(j + h)];
        u[static_cast<Eigen::Index>(j)] = a + b;
        u[static_cast<Eigen::Index>(j + h)] = a - b;
      }
    }
  }
  u /= static_cast<double>(dim);
  Eigen::MatrixXd U(dim, dim);
  for (std::size_t s = 0; s < dim; ++s) {
    for (std::size_t t = 0; t < dim; ++t) {
      U(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) =
          u[static_cast<Eigen::Index>(s ^ t)];
    }
  }
  return U;
}

}  // namespace edgequbit
