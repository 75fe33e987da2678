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
#include <map>
#include <string>
#include <vector>

#include "edgequbit/bessel.hpp"
#include "edgequbit/errors.hpp"
#include "edgequbit/operator_sum.hpp"
#include "edgequbit/pauli.hpp"

namespace edgequbit {

enum class Family { kZXZ, kIsing, kDualIsing, kFloquet };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::kZXZ: return "ZXZ";
    case Family::kIsing: return "ISING";
    case Family::kDualIsing: return "DUAL_ISING";
    case Family::kFloquet: return "FLOQUET";
  }
  return "?";
}

inline Family family_from_name(const std::string& name) {
  if (name == "ZXZ") return Family::kZXZ;
  if (name == "ISING") return Family::kIsing;
  if (name == "DUAL_ISING") return Family::kDualIsing;
  if (name == "FLOQUET") return Family::kFloquet;
  throw ModelError("unknown model family \"" + name + "\"");
}

/// Coupling names accepted by each family.
inline const std::vector<std::string>& coupling_names(Family f) {
  static const std::vector<std::string> kZxz = {"lambda1", "lambda2", "gamma", "gamma2"};
  static const std::vector<std::string> kIsing = {"J", "gamma", "J2"};
  static const std::vector<std::string> kFloquet = {"h1", "h2", "lambda1", "lambda2", "Vx"};
  switch (f) {
    case Family::kZXZ:
    case Family::kDualIsing: return kZxz;
    case Family::kIsing: return kIsing;
    case Family::kFloquet: return kFloquet;
  }
  return kZxz;
}

/// Boundary variants. Defaults give the open chains used for all numerics.
struct ModelOptions {
  /// ZXZ / DUAL_ISING: use the shorter stabilizer sums (lambda1 sum to M-2,
  /// lambda2 sum to M-3, and for the dual model no field on site 1). In that form site 1 is not coupled to any
  /// stabilizer, so it is kept only for reference.
  bool literal_ranges = false;
  /// ISING: extend the transverse field to site L (by default it stops at L-1).
  bool field_on_last_site = false;

  friend bool operator==(const ModelOptions&, const ModelOptions&) = default;
};

/// Declarative Hamiltonian specification.
struct ChainModel {
  Family family = Family::kZXZ;
  int L = 0;
  std::map<std::string, double> couplings;
  ModelOptions options;

  double coupling(const std::string& name) const {
    auto it = couplings.find(name);
    if (it == couplings.end()) {
      throw ModelError(family_name(family) + " model is missing coupling \"" + name + "\"");
    }
    return it->second;
  }

  void validate() const {
    if (L < 4 || L > kMaxSites) {
      throw ModelError("L must be in [4, 64], got " + std::to_string(L));
    }
    if ((family == Family::kZXZ || family == Family::kDualIsing) && L % 2 != 0) {
      throw ModelError(family_name(family) + " requires even L = 2M, got " + std::to_string(L));
    }
    const auto& names = coupling_names(family);
    for (const auto& [name, value] : couplings) {
      if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw ModelError("coupling \"" + name + "\" is not defined for " + family_name(family));
      }
      if (!std::isfinite(value)) throw ModelError("coupling \"" + name + "\" is not finite");
    }
    for (const auto& name : names) (void)coupling(name);
  }

  friend bool operator==(const ChainModel&, const ChainModel&) = default;

  static ChainModel zxz(int L, double lambda1, double lambda2, double gamma, double gamma2) {
    return {Family::kZXZ, L,
            {{"lambda1", lambda1}, {"lambda2", lambda2}, {"gamma", gamma}, {"gamma2", gamma2}}, {}};
  }
  static ChainModel dual_ising(int L, double lambda1, double lambda2, double gamma,
                               double gamma2) {
    ChainModel m = zxz(L, lambda1, lambda2, gamma, gamma2);
    m.family = Family::kDualIsing;
    return m;
  }
  static ChainModel ising(int L, double J, double gamma, double J2) {
    return {Family::kIsing, L, {{"J", J}, {"gamma", gamma}, {"J2", J2}}, {}};
  }
  static ChainModel floquet(int L, double h1, double h2, double lambda1, double lambda2,
                            double vx) {
    return {Family::kFloquet,
            L,
            {{"h1", h1}, {"h2", h2}, {"lambda1", lambda1}, {"lambda2", lambda2}, {"Vx", vx}},
            {}};
  }
};

namespace detail {

inline void add_term(OperatorSum<double>& h, double coeff, const PauliString& p) {
  if (coeff != 0.0) h.add(p, coeff);
}

inline PauliString zxz_triple(int L, int left) {
  return PauliString(L, site_bit(left + 1), site_bit(left) | site_bit(left + 2));
}

inline PauliString zz_pair(int L, int a, int b) {
  return PauliString(L, 0, site_bit(a) | site_bit(b));
}

inline PauliString xx_pair(int L, int a) {
  return PauliString(L, site_bit(a) | site_bit(a + 1), 0);
}

inline void require_family(const ChainModel& m, Family f, const char* what) {
  if (m.family != f) {
    throw ModelError(std::string(what) + ": expected family " + family_name(f) + ", got " +
                     family_name(m.family));
  }
  m.validate();
}

}  // namespace detail

/// Dimerized ZXZ chain with transverse field and XX coupling:
///   lambda1 * sum Z_{2j-1} X_{2j} Z_{2j+1}   (j = 1..M-1)
/// + lambda2 * sum Z_{2j} X_{2j+1} Z_{2j+2}   (j = 1..M-1)
/// + gamma * sum_{j=1}^{L} X_j + gamma2 * sum_{j=1}^{L-1} X_j X_{j+1}.
/// The lambda1 stabilizers are the ones touching the edge spin, which is what
/// makes Z_1 and X_1 Z_2 conjugate edge operators. With
/// options.literal_ranges the stabilizer sums use the shorter ranges instead
/// (lambda1 on Z_{2j} X_{2j+1} Z_{2j+2}, j <= M-2; lambda2 on
/// Z_{2j+1} X_{2j+2} Z_{2j+3}, j <= M-3).
inline OperatorSum<double> build_zxz(const ChainModel& m) {
  detail::require_family(m, Family::kZXZ, "build_zxz");
  if (m.L < 6) throw ModelError("build_zxz requires L >= 6, got " + std::to_string(m.L));
  const int L = m.L;
  const int M = L / 2;
  const double l1 = m.coupling("lambda1");
  const double l2 = m.coupling("lambda2");
  const double g = m.coupling("gamma");
  const double g2 = m.coupling("gamma2");
  OperatorSum<double> h(L);
  if (m.options.literal_ranges) {
    for (int j = 1; j <= M - 2; ++j) detail::add_term(h, l1, detail::zxz_triple(L, 2 * j));
    for (int j = 1; j <= M - 3; ++j) detail::add_term(h, l2, detail::zxz_triple(L, 2 * j + 1));
  } else {
    for (int j = 1; j <= M - 1; ++j) detail::add_term(h, l1, detail::zxz_triple(L, 2 * j - 1));
    for (int j = 1; j <= M - 1; ++j) detail::add_term(h, l2, detail::zxz_triple(L, 2 * j));
  }
  for (int j = 1; j <= L; ++j) detail::add_term(h, g, PauliString::single(L, j, 'X'));
  for (int j = 1; j <= L - 1; ++j) detail::add_term(h, g2, detail::xx_pair(L, j));
  return h;
}

/// Two transverse-field Ising chains (odd and even sublattices) coupled by
/// gamma2 X_i X_{i+1}; the dual of build_zxz under the same options.
inline OperatorSum<double> build_dual_ising(const ChainModel& m) {
  detail::require_family(m, Family::kDualIsing, "build_dual_ising");
  if (m.L < 6) throw ModelError("build_dual_ising requires L >= 6, got " + std::to_string(m.L));
  const int L = m.L;
  const int M = L / 2;
  const double l1 = m.coupling("lambda1");
  const double l2 = m.coupling("lambda2");
  const double g = m.coupling("gamma");
  const double g2 = m.coupling("gamma2");
  OperatorSum<double> h(L);
  if (m.options.literal_ranges) {
    for (int j = 1; j <= M - 2; ++j) detail::add_term(h, l1, detail::zz_pair(L, 2 * j, 2 * j + 2));
    for (int j = 1; j <= M; ++j) detail::add_term(h, g, PauliString::single(L, 2 * j, 'X'));
    for (int j = 1; j <= M - 3; ++j) {
      detail::add_term(h, l2, detail::zz_pair(L, 2 * j + 1, 2 * j + 3));
    }
    for (int j = 1; j <= M - 1; ++j) detail::add_term(h, g, PauliString::single(L, 2 * j + 1, 'X'));
  } else {
    for (int j = 1; j <= M - 1; ++j) {
      detail::add_term(h, l1, detail::zz_pair(L, 2 * j - 1, 2 * j + 1));
      detail::add_term(h, l2, detail::zz_pair(L, 2 * j, 2 * j + 2));
    }
    for (int j = 1; j <= L; ++j) detail::add_term(h, g, PauliString::single(L, j, 'X'));
  }
  for (int i = 1; i <= L - 1; ++i) detail::add_term(h, g2, detail::xx_pair(L, i));
  return h;
}

/// -J sum Z_j Z_{j+1} - gamma sum_{j=1}^{L-1} X_j - J2 sum Z_j Z_{j+2}.
/// The field stops at site L-1 unless options.field_on_last_site is set.
inline OperatorSum<double> build_ising(const ChainModel& m) {
  if (m.family != Family::kIsing) {
    throw ModelError("build_ising: expected family ISING, got " + family_name(m.family));
  }
  if (m.L < 3 || m.L > kMaxSites) throw ModelError("build_ising requires 3 <= L <= 64");
  const int L = m.L;
  const double J = m.coupling("J");
  const double g = m.coupling("gamma");
  const double J2 = m.coupling("J2");
  OperatorSum<double> h(L);
  for (int j = 1; j <= L - 1; ++j) detail::add_term(h, -J, detail::zz_pair(L, j, j + 1));
  const int last_field = m.options.field_on_last_site ? L : L - 1;
  for (int j = 1; j <= last_field; ++j) detail::add_term(h, -g, PauliString::single(L, j, 'X'));
  for (int j = 1; j <= L - 2; ++j) detail::add_term(h, -J2, detail::zz_pair(L, j, j + 2));
  return h;
}

/// Coefficients of the leading-order effective Floquet Hamiltonian.
struct FloquetCoefficients {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c_edge = 0.0;

  static double c_of(double lambda) { return 0.5 * (1.0 + bessel_j0(4.0 * lambda)); }
  static double d_of(double lambda) { return 1.0 - c_of(lambda); }
};

inline FloquetCoefficients floquet_coefficients(double lambda1, double lambda2) {
  if (!std::isfinite(lambda1) || !std::isfinite(lambda2)) {
    throw DomainError("floquet_coefficients: non-finite drive amplitude");
  }
  FloquetCoefficients f;
  f.lambda1 = lambda1;
  f.lambda2 = lambda2;
  const double j_minus = bessel_j0(2.0 * (lambda1 - lambda2));
  f.a = 0.5 * (j_minus + bessel_j0(2.0 * (lambda1 + lambda2)));
  f.b = j_minus - f.a;
  f.c_edge = bessel_j0(2.0 * lambda2);
  return f;
}

/// Dimerized transverse field: h1 on even sites, h2 on odd sites. The ZXZ
/// term centred on an even site is the one touching the edge spin, so h1
/// plays the role of lambda1 in build_zxz.
inline double floquet_field(const ChainModel& m, int site) {
  return site % 2 == 0 ? m.coupling("h1") : m.coupling("h2");
}

/// Drive amplitude lambda_k: lambda1 on odd k, lambda2 on even k. Bond
/// (i, i+1) uses lambda_{i+1}, so the edge bond (1, 2) sees lambda2, the
/// same amplitude that enters c_edge.
inline double floquet_drive_amplitude(const ChainModel& m, int k) {
  return k % 2 == 1 ? m.coupling("lambda1") : m.coupling("lambda2");
}

/// sum h_i a X_i - sum_{i=2}^{L-1} h_i b Z_{i-1} X_i Z_{i+1}
/// + Vx c_edge (X_1 X_2 + X_{L-1} X_L)
/// + Vx sum_{i=2}^{L-2} [c(lambda_{i+1}) X_i X_{i+1} + d(lambda_{i+1}) Z_{i-1} Y_i Y_{i+1} Z_{i+2}].
inline OperatorSum<double> build_floquet(const ChainModel& m) {
  detail::require_family(m, Family::kFloquet, "build_floquet");
  if (m.L < 5) throw ModelError("build_floquet requires L >= 5, got " + std::to_string(m.L));
  const int L = m.L;
  const FloquetCoefficients f = floquet_coefficients(m.coupling("lambda1"), m.coupling("lambda2"));
  const double vx = m.coupling("Vx");
  OperatorSum<double> h(L);
  for (int i = 1; i <= L; ++i) {
    detail::add_term(h, floquet_field(m, i) * f.a, PauliString::single(L, i, 'X'));
  }
  for (int i = 2; i <= L - 1; ++i) {
    detail::add_term(h, -floquet_field(m, i) * f.b, detail::zxz_triple(L, i - 1));
  }
  detail::add_term(h, vx * f.c_edge, detail::xx_pair(L, 1));
  detail::add_term(h, vx * f.c_edge, detail::xx_pair(L, L - 1));
  for (int i = 2; i <= L - 2; ++i) {
    const double lam = floquet_drive_amplitude(m, i + 1);
    detail::add_term(h, vx * FloquetCoefficients::c_of(lam), detail::xx_pair(L, i));
    PauliString zyyz = PauliString::single(L, i - 1, 'Z') * PauliString::single(L, i, 'Y') *
                       PauliString::single(L, i + 1, 'Y') * PauliString::single(L, i + 2, 'Z');
    detail::add_term(h, vx * FloquetCoefficients::d_of(lam), zyyz);
  }
  return h;
}

/// Dispatches on the model family.
inline OperatorSum<double> build_hamiltonian(const ChainModel& m) {
  switch (m.family) {
    case Family::kZXZ: return build_zxz(m);
    case Family::kIsing: return build_ising(m);
    case Family::kDualIsing: return build_dual_ising(m);
    case Family::kFloquet: return build_floquet(m);
  }
  throw ModelError("unknown family");
}

/// Conjugate edge operators of the SPT chain.
struct EdgeOperators {
  PauliString sigma_x;
  PauliString sigma_y;
  PauliString sigma_z;
};

/// Sigma^x = X1 Z2, Sigma^y = Y1 Z2, Sigma^z = Z1.
inline EdgeOperators edge_operators(int L) {
  if (L < 4 || L % 2 != 0) throw ModelError("edge_operators requires even L >= 4");
  return {PauliString::parse(L, "X1 Z2"), PauliString::parse(L, "Y1 Z2"),
          PauliString::parse(L, "Z1")};
}

struct SymmetryOperators {
  PauliString g_even;
  PauliString g_odd;
};

inline Mask even_sites(int L) {
  Mask m = 0;
  for (int j = 2; j <= L; j += 2) m |= site_bit(j);
  return m;
}

inline Mask odd_sites(int L) {
  Mask m = 0;
  for (int j = 1; j <= L; j += 2) m |= site_bit(j);
  return m;
}

/// G_e = prod_j X_{2j}, G_o = prod_j X_{2j-1}.
inline SymmetryOperators symmetry_operators(int L) {
  if (L < 4 || L % 2 != 0) throw ModelError("symmetry_operators requires even L >= 4");
  return {x_string(L, even_sites(L)), x_string(L, odd_sites(L))};
}

/// Images of the edge operators in the coupled-Ising frame:
/// Z2 G_o, i (Z2 G_o)(Z1) and Z1. The middle entry is i times the product
/// of the other two, preserving the edge spin-1/2 algebra; written with G_o
/// rightmost it equals -i Z1 Z2 G_o.
inline EdgeOperators dual_edge_operators(int L) {
  const SymmetryOperators g = symmetry_operators(L);
  PauliString sx = PauliString::parse(L, "Z2") * g.g_odd;
  PauliString sz = PauliString::parse(L, "Z1");
  PauliString sy = (sx * sz).with_phase((sx * sz).phase() * Phase::kI);
  return {sx, sy, sz};
}

/// sigma^z on the middle site ceil(L/2).
inline PauliString bulk_reference(int L) {
  return PauliString::single(L, (L + 1) / 2, 'Z');
}

}  // namespace edgequbit
