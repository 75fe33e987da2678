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
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "edgequbit/duality.hpp"
#include "edgequbit/errors.hpp"
#include "edgequbit/models.hpp"
#include "edgequbit/operator_sum.hpp"
#include "edgequbit/rational.hpp"

namespace edgequbit {

// ---------------------------------------------------------------------------
// Almost strong zero modes by perturbation theory in (Gamma, Gamma2).
//
// The expansion runs in the coupled-Ising frame, where
//   H0 = lambda1 sum Z_{2j-1} Z_{2j+1} + lambda2 sum Z_{2j} Z_{2j+2}
// is diagonal and V = Gamma sum X_i + Gamma2 sum X_i X_{i+1}. Order n solves
//   [H0, Psi^(n)] = -[V, Psi^(n-1)].
// For a bond b = Z_a Z_b with odd overlap with x,
//   [h Z_a Z_b, X^x Z^z] = -2 h X^x Z^(z ^ zb),
// so ad_H0 keeps the x-mask and acts on z as a sum of translations. Its
// eigenvectors are Walsh characters over the bond endpoints T:
//   mu(s) = -2 sum_b h_b (-1)^(s . zb) = -2 (n1 lambda1 + n2 lambda2)
// with integer n1, n2. The solve is a Walsh transform, a pointwise division
// and an inverse transform. Components with mu(s) = 0 are left at zero
// (minimal norm). When n1 = n2 = 0 the component lies in ker ad_H0 and cannot
// be cancelled at this order; it is reported as a kernel residual. When
// mu(s) = 0 only because of the particular ratio lambda1 / lambda2 the
// expansion has a pole.

enum class Seed { kSigmaX, kSigmaZ };

inline std::string seed_name(Seed s) { return s == Seed::kSigmaX ? "SigmaX" : "SigmaZ"; }

inline Seed seed_from_name(const std::string& name) {
  if (name == "SigmaX" || name == "sigma_x" || name == "Sx" || name == "x") return Seed::kSigmaX;
  if (name == "SigmaZ" || name == "sigma_z" || name == "Sz" || name == "z") return Seed::kSigmaZ;
  throw ParseError("unknown seed \"" + name + "\" (expected SigmaX or SigmaZ)");
}

/// Vanishing denominator n1 lambda1 + n2 lambda2 met at a given order.
struct PoleRecord {
  int order = 0;
  long long n1 = 0;
  long long n2 = 0;
  /// Resonant ratio lambda1 / lambda2 = p / q in lowest terms.
  long long p = 0;
  long long q = 0;
  Seed seed = Seed::kSigmaZ;

  std::string ratio() const { return std::to_string(p) + "/" + std::to_string(q); }

  std::string denominator() const {
    auto term = [](long long n, const char* name, bool first) {
      std::string out;
      if (n < 0) out += first ? "-" : " - ";
      else if (!first) out += " + ";
      const long long a = n < 0 ? -n : n;
      if (a != 1) out += std::to_string(a) + "*";
      return out + name;
    };
    std::string out;
    if (n1 != 0) out += term(n1, "lambda1", true);
    if (n2 != 0) out += term(n2, "lambda2", out.empty());
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const PoleRecord&, const PoleRecord&) = default;
};

class PoleError : public Error {
 public:
  explicit PoleError(PoleRecord r)
      : Error("SZM expansion pole at order " + std::to_string(r.order) + ": denominator " +
              r.denominator() + " vanishes (lambda1/lambda2 = " + r.ratio() + ", seed " +
              seed_name(r.seed) + ")"),
        record_(r) {}
  const PoleRecord& record() const { return record_; }

 private:
  PoleRecord record_;
};

template <class S>
struct SZMCouplings {
  S lambda1;
  S lambda2;
  S gamma;
  S gamma2;
};

struct SZMOptions {
  /// Raise PoleError at the first pole; otherwise record it and stop.
  bool throw_on_pole = true;
  /// Floating mode: mu(s) counts as zero below this fraction of max |mu|.
  double singular_tolerance = 1e-10;
};

inline constexpr int kMaxSZMOrder = 4;

template <class S>
struct SZMExpansion {
  Seed seed = Seed::kSigmaZ;
  Family family = Family::kZXZ;
  int L = 0;
  bool exact = false;
  /// Psi^(0), Psi^(1), ... in the frame of `family`.
  std::vector<OperatorSum<S>> orders;
  /// The same orders in the coupled-Ising frame.
  std::vector<OperatorSum<S>> dual_orders;
  std::vector<PoleRecord> poles;
  /// kernel_residual[n] = squared trace norm of the part of [V, Psi^(n-1)]
  /// lying in ker ad_H0 (entry 0 is always zero).
  std::vector<double> kernel_residual;

  int computed_order() const { return static_cast<int>(orders.size()) - 1; }

  /// Psi^(0) + ... + Psi^(n).
  OperatorSum<S> truncated(int n) const {
    if (n < 0 || n > computed_order()) throw DomainError("truncated: order not computed");
    OperatorSum<S> sum = orders[0];
    for (int k = 1; k <= n; ++k) sum += orders[static_cast<std::size_t>(k)];
    return sum;
  }
};

namespace detail {

struct DiagonalBond {
  Mask z = 0;
  int coupling_class = 1;  // 1 -> lambda1, 2 -> lambda2
};

template <class S>
struct DualFrame {
  std::vector<DiagonalBond> bonds;
  OperatorSum<S> perturbation;
};

/// Splits the coupled-Ising Hamiltonian into its diagonal bonds and the
/// off-diagonal perturbation. The term structure is read off build_dual_ising
/// evaluated with the marker couplings 1, 2, 3, 4.
template <class S>
DualFrame<S> dual_frame(int L, const SZMCouplings<S>& c, const ModelOptions& options) {
  ChainModel marker = ChainModel::dual_ising(L, 1.0, 2.0, 3.0, 4.0);
  marker.options = options;
  const OperatorSum<double> h = build_dual_ising(marker);
  DualFrame<S> f{{}, OperatorSum<S>(L)};
  for (const auto& [k, v] : h) {
    if (v == 1.0 || v == 2.0) {
      if (k.x != 0 || std::popcount(k.z) != 2) throw ModelError("dual_frame: unexpected bond");
      f.bonds.push_back({k.z, v == 1.0 ? 1 : 2});
    } else if (v == 3.0) {
      f.perturbation.add(k, c.gamma);
    } else if (v == 4.0) {
      f.perturbation.add(k, c.gamma2);
    } else {
      throw ModelError("dual_frame: unexpected coupling marker");
    }
  }
  return f;
}

/// In-place unnormalized Walsh-Hadamard transform.
template <class S>
void walsh_hadamard(std::vector<S>& v) {
  for (std::size_t h = 1; h < v.size(); h <<= 1) {
    for (std::size_t i = 0; i < v.size(); i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        S a = v[j];
        S b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

inline std::size_t compress_bits(Mask value, const std::vector<int>& positions) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if ((value >> positions[i]) & 1) out |= std::size_t{1} << i;
  }
  return out;
}

inline Mask expand_bits(std::size_t value, const std::vector<int>& positions) {
  Mask out = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if ((value >> i) & 1) out |= Mask{1} << positions[i];
  }
  return out;
}

template <class S>
double squared_magnitude(const S& v) {
  const double m = ScalarTraits<S>::magnitude(v);
  return m * m;
}

/// One order of the expansion: returns Psi with ad_H0(Psi) = rhs on the
/// range of ad_H0. Adds the kernel part of rhs to `kernel_norm`; sets `pole`
/// and returns early if rhs has weight on a component whose denominator
/// vanishes at the given couplings.
template <class S>
OperatorSum<S> solve_order(const DualFrame<S>& frame, const SZMCouplings<S>& c,
                           const OperatorSum<S>& rhs, const SZMOptions& options,
                           double& kernel_norm, std::optional<std::pair<long long, long long>>& pole) {
  const int L = rhs.n_sites();
  OperatorSum<S> psi(L, rhs.prune_tolerance());
  std::map<Mask, std::vector<std::pair<Mask, S>>> by_x;
  for (const auto& [k, v] : rhs) by_x[k.x].emplace_back(k.z, v);

  for (const auto& [x, terms] : by_x) {
    std::vector<const DiagonalBond*> active;
    Mask t_mask = 0;
    for (const auto& b : frame.bonds) {
      if (parity(b.z & x)) {
        active.push_back(&b);
        t_mask |= b.z;
      }
    }
    if (active.empty()) {
      for (const auto& [z, v] : terms) kernel_norm += squared_magnitude(v);
      continue;
    }
    std::vector<int> positions;
    for (Mask m = t_mask; m != 0; m &= m - 1) positions.push_back(std::countr_zero(m));
    const std::size_t dim = std::size_t{1} << positions.size();

    // Integer denominators per Walsh index.
    std::vector<long long> n1(dim, 0), n2(dim, 0);
    std::vector<std::size_t> bond_bits;
    for (const auto* b : active) bond_bits.push_back(compress_bits(b->z, positions));
    for (std::size_t s = 0; s < dim; ++s) {
      for (std::size_t i = 0; i < active.size(); ++i) {
        const long long sign = std::popcount(s & bond_bits[i]) & 1 ? -1 : 1;
        (active[i]->coupling_class == 1 ? n1[s] : n2[s]) += sign;
      }
    }
    std::vector<S> mu(dim);
    double mu_max = 0.0;
    for (std::size_t s = 0; s < dim; ++s) {
      mu[s] = S(-2) * (S(n1[s]) * c.lambda1 + S(n2[s]) * c.lambda2);
      mu_max = std::max(mu_max, ScalarTraits<S>::magnitude(mu[s]));
    }

    std::map<Mask, std::vector<S>> groups;
    for (const auto& [z, v] : terms) {
      auto& vec = groups.try_emplace(z & ~t_mask, dim, S(0)).first->second;
      vec[compress_bits(z, positions)] += v;
    }
    for (auto& [outside, r] : groups) {
      walsh_hadamard(r);
      double r_max = 0.0;
      for (const S& v : r) r_max = std::max(r_max, ScalarTraits<S>::magnitude(v));
      for (std::size_t s = 0; s < dim; ++s) {
        bool r_zero;
        bool mu_zero;
        if constexpr (ScalarTraits<S>::kExact) {
          r_zero = r[s] == 0;
          mu_zero = mu[s] == 0;
        } else {
          r_zero = ScalarTraits<S>::magnitude(r[s]) <= 1e-9 * r_max;
          mu_zero = ScalarTraits<S>::magnitude(mu[s]) <= options.singular_tolerance * mu_max;
        }
        if (n1[s] == 0 && n2[s] == 0) {
          if (!r_zero) kernel_norm += squared_magnitude(r[s]) / static_cast<double>(dim);
          r[s] = S(0);
        } else if (mu_zero) {
          if (!r_zero) {
            pole = std::make_pair(n1[s], n2[s]);
            return psi;
          }
          r[s] = S(0);
        } else {
          r[s] = r[s] / mu[s];
        }
      }
      walsh_hadamard(r);
      const S inv_dim = S(1) / S(static_cast<long long>(dim));
      for (std::size_t t = 0; t < dim; ++t) {
        if (ScalarTraits<S>::is_zero(r[t], 0.0)) continue;
        psi.add(PauliKey{x, outside | expand_bits(t, positions)}, r[t] * inv_dim);
      }
    }
  }
  return psi;
}

inline PoleRecord make_pole(int order, long long n1, long long n2, Seed seed) {
  PoleRecord r;
  r.order = order;
  r.n1 = n1;
  r.n2 = n2;
  r.seed = seed;
  long long p = n2 < 0 ? -n2 : n2;
  long long q = n1 < 0 ? -n1 : n1;
  const long long g = std::gcd(p, q);
  if (g > 0) {
    p /= g;
    q /= g;
  }
  r.p = p;
  r.q = q;
  return r;
}

}  // namespace detail

/// Order-by-order almost SZM of the ZXZ chain (or of its coupled-Ising dual)
/// seeded by Sigma^x or Sigma^z.
template <class S>
SZMExpansion<S> expand_szm(Family family, int L, const SZMCouplings<S>& c, Seed seed,
                           int max_order, const ModelOptions& model_options = {},
                           const SZMOptions& options = {}) {
  if (family != Family::kZXZ && family != Family::kDualIsing) {
    throw ModelError("expand_szm supports the ZXZ and DUAL_ISING families only");
  }
  if (max_order < 0 || max_order > kMaxSZMOrder) {
    throw DomainError("expand_szm: max_order must be in [0, " + std::to_string(kMaxSZMOrder) + "]");
  }
  if (L < 6 || L % 2 != 0) throw ModelError("expand_szm requires even L >= 6");
  const DualityContext ctx(L);
  const detail::DualFrame<S> frame = detail::dual_frame(L, c, model_options);
  const EdgeOperators edge = dual_edge_operators(L);

  SZMExpansion<S> out;
  out.seed = seed;
  out.family = family;
  out.L = L;
  out.exact = ScalarTraits<S>::kExact;
  out.dual_orders.push_back(OperatorSum<S>(seed == Seed::kSigmaX ? edge.sigma_x : edge.sigma_z));
  out.kernel_residual.push_back(0.0);

  for (int n = 1; n <= max_order; ++n) {
    OperatorSum<S> rhs = commutator(frame.perturbation, out.dual_orders.back());
    rhs *= S(-1);
    double kernel = 0.0;
    std::optional<std::pair<long long, long long>> pole;
    OperatorSum<S> psi = detail::solve_order(frame, c, rhs, options, kernel, pole);
    if (pole) {
      PoleRecord rec = detail::make_pole(n, pole->first, pole->second, seed);
      if (options.throw_on_pole) throw PoleError(rec);
      out.poles.push_back(rec);
      break;
    }
    out.kernel_residual.push_back(kernel);
    out.dual_orders.push_back(std::move(psi));
  }
  for (const auto& d : out.dual_orders) {
    out.orders.push_back(family == Family::kZXZ ? dualize(d, ctx) : d);
  }
  return out;
}

inline SZMCouplings<double> szm_couplings(const ChainModel& m) {
  return {m.coupling("lambda1"), m.coupling("lambda2"), m.coupling("gamma"), m.coupling("gamma2")};
}

/// Floating-point expansion for a model specification.
inline SZMExpansion<double> expand_szm(const ChainModel& m, Seed seed, int max_order,
                                       const SZMOptions& options = {}) {
  m.validate();
  return expand_szm<double>(m.family, m.L, szm_couplings(m), seed, max_order, m.options, options);
}

/// Exact-rational expansion; the couplings are converted exactly from their
/// binary floating-point values.
inline SZMExpansion<Rational> expand_szm_exact(const ChainModel& m, Seed seed, int max_order,
                                               const SZMOptions& options = {}) {
  m.validate();
  const SZMCouplings<Rational> c{exact_rational(m.coupling("lambda1")),
                                 exact_rational(m.coupling("lambda2")),
                                 exact_rational(m.coupling("gamma")),
                                 exact_rational(m.coupling("gamma2"))};
  return expand_szm<Rational>(m.family, m.L, c, seed, max_order, m.options, options);
}

/// Scans lambda1 / lambda2 = p / q over coprime 1 <= p, q <= q_max in exact
/// arithmetic and returns, for every ratio where the expansion breaks down
/// within max_order, the first failing order.
inline std::vector<PoleRecord> detect_poles(Seed seed, int max_order, int q_max = 4, int L = 16) {
  if (q_max < 1) throw DomainError("detect_poles: q_max must be positive");
  std::vector<PoleRecord> found;
  SZMOptions options;
  options.throw_on_pole = false;
  for (long long p = 1; p <= q_max; ++p) {
    for (long long q = 1; q <= q_max; ++q) {
      if (std::gcd(p, q) != 1) continue;
      // Gamma2 / Gamma is kept generic so that no accidental cancellation
      // between the two perturbations hides a pole.
      const SZMCouplings<Rational> c{Rational(p), Rational(q), Rational(1), Rational(7, 5)};
      const auto e = expand_szm<Rational>(Family::kDualIsing, L, c, seed, max_order, {}, options);
      found.insert(found.end(), e.poles.begin(), e.poles.end());
    }
  }
  std::sort(found.begin(), found.end(), [](const PoleRecord& a, const PoleRecord& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.p * b.q < b.p * a.q;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Rational resonances.

struct ResonanceReport {
  long long p = 0;
  long long q = 0;
  bool sigma_z_resonant = false;
  bool sigma_x_resonant = false;
  /// Smallest number of bulk flip units cancelling the edge cost, if any.
  std::optional<int> order_z;
  std::optional<int> order_x;
  std::optional<int> order_joint;
  /// Set when the input ratio was not in lowest terms.
  std::optional<std::string> warning;
};

/// Smallest n = |a| + |b| with 2 p a + 2 q b = cost, searched up to n_max.
inline std::optional<int> resonance_order_oracle(long long p, long long q, long long cost,
                                                 int n_max = 12) {
  if (p <= 0 || q <= 0) throw DomainError("resonance_order_oracle: p and q must be positive");
  if (n_max < 0 || n_max > 12) throw DomainError("resonance_order_oracle: n_max must be in [0, 12]");
  for (int n = 1; n <= n_max; ++n) {
    for (int a = -n; a <= n; ++a) {
      const int rest = n - (a < 0 ? -a : a);
      for (int b : {rest, -rest}) {
        if (2 * p * a + 2 * q * b == cost) return n;
      }
    }
  }
  return std::nullopt;
}

/// Parity rule for lambda1 / lambda2 = p / q: Sigma^z resonates when p is
/// even, Sigma^x when q is even, and both when p and q are odd. The oracle
/// orders are attached for the edge costs p, q and p + q.
inline ResonanceReport predict_resonance(long long p, long long q, int n_max = 12) {
  if (p <= 0 || q <= 0) throw DomainError("predict_resonance: p and q must be positive");
  ResonanceReport r;
  const long long g = std::gcd(p, q);
  if (g != 1) {
    r.warning = "ratio " + std::to_string(p) + "/" + std::to_string(q) + " reduced to " +
                std::to_string(p / g) + "/" + std::to_string(q / g);
    p /= g;
    q /= g;
  }
  r.p = p;
  r.q = q;
  const bool both_odd = (p % 2 == 1) && (q % 2 == 1);
  r.sigma_z_resonant = p % 2 == 0 || both_odd;
  r.sigma_x_resonant = q % 2 == 0 || both_odd;
  r.order_z = resonance_order_oracle(p, q, p, n_max);
  r.order_x = resonance_order_oracle(p, q, q, n_max);
  r.order_joint = resonance_order_oracle(p, q, p + q, n_max);
  return r;
}

/// Plateau estimate <Sigma, Psi>^2 / <Psi, Psi> with the
/// normalized trace inner product; equals <Sigma, Psi>^2 for unit-norm Psi.
template <class S>
double plateau_overlap(const OperatorSum<S>& sigma, const OperatorSum<S>& psi) {
  if (sigma.n_sites() != psi.n_sites()) throw DimensionError("plateau_overlap: length mismatch");
  const double nn = std::abs(ScalarTraits<S>::to_complex(norm_squared(psi)));
  if (nn == 0.0) throw DomainError("plateau_overlap: Psi vanishes");
  const Complex ov = ScalarTraits<S>::to_complex(trace_inner_product(sigma, psi));
  return std::norm(ov) / nn;
}

/// Squared trace norm of [H, Psi].
template <class S>
double commutator_norm_squared(const OperatorSum<S>& h, const OperatorSum<S>& psi) {
  return std::abs(ScalarTraits<S>::to_complex(norm_squared(commutator(h, psi))));
}

}  // namespace edgequbit
