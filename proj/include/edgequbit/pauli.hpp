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

#include <bit>
#include <cctype>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "edgequbit/errors.hpp"

namespace edgequbit {

/// One bit per site; site j (1-based) lives in bit j-1.
using Mask = std::uint64_t;

inline constexpr int kMaxSites = 64;

inline constexpr Mask site_bit(int site) { return Mask{1} << (site - 1); }

inline constexpr Mask low_mask(int n_sites) {
  return n_sites >= 64 ? ~Mask{0} : (Mask{1} << n_sites) - 1;
}

inline int parity(Mask m) { return std::popcount(m) & 1; }

/// Powers of i.
enum class Phase : std::uint8_t { kOne = 0, kI = 1, kMinusOne = 2, kMinusI = 3 };

inline constexpr Phase phase_from_power(int k) {
  return static_cast<Phase>(((k % 4) + 4) % 4);
}
inline constexpr int phase_power(Phase p) { return static_cast<int>(p); }
inline constexpr Phase operator*(Phase a, Phase b) {
  return phase_from_power(phase_power(a) + phase_power(b));
}

/// Phase-free key of a Pauli string. The key (x, z) denotes the real matrix
/// X^x Z^z: all X factors to the left of all Z factors. A site present in
/// both masks therefore carries X Z = -i Y.
struct PauliKey {
  Mask x = 0;
  Mask z = 0;

  friend constexpr auto operator<=>(const PauliKey&, const PauliKey&) = default;

  Mask support() const { return x | z; }
  int weight() const { return std::popcount(x | z); }
  int y_count() const { return std::popcount(x & z); }
};

/// Sign s in (X^a Z^b)(X^c Z^d) = s X^(a^c) Z^(b^d).
inline int product_sign(const PauliKey& p, const PauliKey& q) {
  return parity(p.z & q.x) ? -1 : 1;
}

/// Two strings commute iff their symplectic overlap is even.
inline bool keys_commute(const PauliKey& p, const PauliKey& q) {
  return parity((p.x & q.z) ^ (p.z & q.x)) == 0;
}

/// A signed multi-site Pauli operator i^k X^x Z^z on a chain of n sites.
///
/// Phase convention: Y = i X Z on every site, so Y_j is stored as x_j = z_j = 1
/// with one power of i. Hermitian strings are exactly those whose phase power
/// has the same parity as their Y count.
class PauliString {
 public:
  explicit PauliString(int n_sites) : n_sites_(n_sites) { check_length(n_sites); }

  PauliString(int n_sites, Mask x, Mask z, Phase phase = Phase::kOne)
      : n_sites_(n_sites), key_{x, z}, phase_(phase) {
    check_length(n_sites);
    if (((x | z) & ~low_mask(n_sites)) != 0) {
      throw DimensionError("PauliString: mask has bits beyond site " +
                           std::to_string(n_sites));
    }
  }

  /// Single-site factor; `op` is one of I, X, Y, Z.
  static PauliString single(int n_sites, int site, char op) {
    PauliString p(n_sites);
    p.apply_factor(site, op);
    return p;
  }

  /// Parses a factor list such as "Z1 X2 Z3" or "X1*Y4". An empty list or "I"
  /// gives the identity. Repeated sites are multiplied left to right.
  static PauliString parse(int n_sites, std::string_view text) {
    PauliString p(n_sites);
    std::size_t i = 0;
    while (i < text.size()) {
      char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
        ++i;
        continue;
      }
      char op = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (op != 'X' && op != 'Y' && op != 'Z' && op != 'I') {
        throw ParseError("unexpected character '" + std::string(1, c) +
                         "' in Pauli factor list \"" + std::string(text) + "\"");
      }
      ++i;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) {
        if (op == 'I') continue;
        throw ParseError("missing site index after '" + std::string(1, op) + "'");
      }
      int site = std::stoi(std::string(text.substr(start, i - start)));
      p.apply_factor(site, op);
    }
    return p;
  }

  int n_sites() const { return n_sites_; }
  Mask x_mask() const { return key_.x; }
  Mask z_mask() const { return key_.z; }
  Phase phase() const { return phase_; }
  const PauliKey& key() const { return key_; }

  int weight() const { return key_.weight(); }
  int y_count() const { return key_.y_count(); }
  bool is_identity() const { return key_.x == 0 && key_.z == 0; }

  /// Sites (1-based, ascending) carrying a non-identity factor.
  std::vector<int> support() const {
    std::vector<int> sites;
    for (Mask m = key_.support(); m != 0; m &= m - 1) {
      sites.push_back(std::countr_zero(m) + 1);
    }
    return sites;
  }

  bool is_hermitian() const {
    return ((phase_power(phase_) + y_count()) & 1) == 0;
  }

  /// Phase when the string is written with explicit Y factors.
  Phase y_notation_phase() const {
    return phase_from_power(phase_power(phase_) - y_count());
  }

  /// Readable form with explicit Y factors, e.g. "+X1 Z2", "-i Y1", "+I".
  std::string to_string() const {
    static constexpr const char* kPrefix[] = {"+", "+i ", "-", "-i "};
    std::string out = kPrefix[phase_power(y_notation_phase())];
    std::string factors = factor_string();
    out += factors.empty() ? "I" : factors;
    return out;
  }

  /// Factor list in Y notation without any phase, e.g. "X1 Y2 Z3".
  std::string factor_string() const {
    std::string out;
    for (int site : support()) {
      Mask b = site_bit(site);
      char op = (key_.x & b) ? ((key_.z & b) ? 'Y' : 'X') : 'Z';
      if (!out.empty()) out += ' ';
      out += op;
      out += std::to_string(site);
    }
    return out;
  }

  friend bool operator==(const PauliString&, const PauliString&) = default;

  friend PauliString multiply(const PauliString& p, const PauliString& q) {
    if (p.n_sites_ != q.n_sites_) {
      throw DimensionError("multiply: length mismatch (" + std::to_string(p.n_sites_) +
                           " vs " + std::to_string(q.n_sites_) + ")");
    }
    int k = phase_power(p.phase_) + phase_power(q.phase_) +
            (product_sign(p.key_, q.key_) < 0 ? 2 : 0);
    return PauliString(p.n_sites_, p.key_.x ^ q.key_.x, p.key_.z ^ q.key_.z,
                       phase_from_power(k));
  }

  friend PauliString operator*(const PauliString& p, const PauliString& q) {
    return multiply(p, q);
  }

  /// (i^k X^x Z^z)^-1 = i^-k Z^z X^x.
  friend PauliString inverse(const PauliString& p) {
    int k = -phase_power(p.phase_) + (parity(p.key_.x & p.key_.z) ? 2 : 0);
    return PauliString(p.n_sites_, p.key_.x, p.key_.z, phase_from_power(k));
  }

  friend bool commutes(const PauliString& p, const PauliString& q) {
    if (p.n_sites_ != q.n_sites_) throw DimensionError("commutes: length mismatch");
    return keys_commute(p.key_, q.key_);
  }

  PauliString with_phase(Phase phase) const {
    PauliString p = *this;
    p.phase_ = phase;
    return p;
  }

 private:
  static void check_length(int n) {
    if (n < 1 || n > kMaxSites) {
      throw DimensionError("chain length must be in [1, 64], got " + std::to_string(n));
    }
  }

  void apply_factor(int site, char op) {
    if (site < 1 || site > n_sites_) {
      throw DimensionError("site " + std::to_string(site) + " outside chain of length " +
                           std::to_string(n_sites_));
    }
    Mask b = site_bit(site);
    PauliString f(n_sites_);
    switch (op) {
      case 'I': return;
      case 'X': f.key_.x = b; break;
      case 'Z': f.key_.z = b; break;
      case 'Y':
        f.key_.x = b;
        f.key_.z = b;
        f.phase_ = Phase::kI;
        break;
      default: throw ParseError(std::string("unknown Pauli factor '") + op + "'");
    }
    *this = multiply(*this, f);
  }

  int n_sites_;
  PauliKey key_{};
  Phase phase_ = Phase::kOne;
};

inline int weight(const PauliString& p) { return p.weight(); }
inline std::vector<int> support(const PauliString& p) { return p.support(); }

/// Product of sigma^x over the given sites.
inline PauliString x_string(int n_sites, Mask sites) {
  return PauliString(n_sites, sites & low_mask(n_sites), 0);
}

}  // namespace edgequbit
