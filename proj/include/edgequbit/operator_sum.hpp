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

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "edgequbit/errors.hpp"
#include "edgequbit/pauli.hpp"

namespace edgequbit {

using Complex = std::complex<double>;

/// Coefficient-ring hooks used by OperatorSum. Specialized for double,
/// std::complex<double> and (in rational.hpp) exact rationals.
template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool kComplex = false;
  static constexpr bool kExact = false;
  static constexpr double kDefaultPruneTol = 1e-14;
  static double conj(double v) { return v; }
  static double magnitude(double v) { return std::abs(v); }
  static bool is_zero(double v, double tol) { return std::abs(v) < tol; }
  static double from_phase(Phase p) {
    if (phase_power(p) & 1) throw DomainError("imaginary phase in a real OperatorSum");
    return p == Phase::kOne ? 1.0 : -1.0;
  }
  static Complex to_complex(double v) { return {v, 0.0}; }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool kComplex = true;
  static constexpr bool kExact = false;
  static constexpr double kDefaultPruneTol = 1e-14;
  static Complex conj(const Complex& v) { return std::conj(v); }
  static double magnitude(const Complex& v) { return std::abs(v); }
  static bool is_zero(const Complex& v, double tol) { return std::abs(v) < tol; }
  static Complex from_phase(Phase p) {
    static constexpr Complex kPowers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kPowers[phase_power(p)];
  }
  static Complex to_complex(const Complex& v) { return v; }
};

/// Sparse weighted sum of Pauli strings on a chain of n sites.
///
/// Keys are phase free (see PauliKey); every phase lives in the coefficient.
/// Coefficients whose magnitude drops below the prune tolerance are erased
/// (exact rings only erase exact zeros). Terms are kept in key order so all
/// iteration and serialization is deterministic.
template <class Scalar = Complex>
class OperatorSum {
 public:
  using Traits = ScalarTraits<Scalar>;
  using scalar_type = Scalar;
  using Terms = std::map<PauliKey, Scalar>;

  explicit OperatorSum(int n_sites, double prune_tol = Traits::kDefaultPruneTol)
      : n_sites_(n_sites), prune_tol_(Traits::kExact ? 0.0 : prune_tol) {
    if (n_sites < 1 || n_sites > kMaxSites) {
      throw DimensionError("chain length must be in [1, 64], got " + std::to_string(n_sites));
    }
  }

  OperatorSum(const PauliString& p, const Scalar& coefficient = Scalar(1))
      : OperatorSum(p.n_sites()) {
    add(p, coefficient);
  }

  static OperatorSum identity(int n_sites) { return OperatorSum(PauliString(n_sites)); }

  int n_sites() const { return n_sites_; }
  double prune_tolerance() const { return prune_tol_; }
  void set_prune_tolerance(double tol) {
    prune_tol_ = Traits::kExact ? 0.0 : tol;
    prune();
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Adds c * X^x Z^z.
  void add(const PauliKey& key, const Scalar& c) {
    if ((key.support() & ~low_mask(n_sites_)) != 0) {
      throw DimensionError("term acts beyond site " + std::to_string(n_sites_));
    }
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) it->second += c;
    if (Traits::is_zero(it->second, prune_tol_)) terms_.erase(it);
  }

  /// Adds c * p, folding the phase of p into the coefficient.
  void add(const PauliString& p, const Scalar& c = Scalar(1)) {
    check_same_length(p.n_sites(), "add");
    add(p.key(), c * Traits::from_phase(p.phase()));
  }

  /// Coefficient of X^x Z^z (zero when absent).
  Scalar coefficient(const PauliKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void prune() {
    std::erase_if(terms_, [&](const auto& kv) { return Traits::is_zero(kv.second, prune_tol_); });
  }

  Mask support_mask() const {
    Mask m = 0;
    for (const auto& [k, c] : terms_) m |= k.support();
    return m;
  }

  OperatorSum& operator+=(const OperatorSum& other) {
    check_same_length(other.n_sites_, "operator+");
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  OperatorSum& operator-=(const OperatorSum& other) {
    check_same_length(other.n_sites_, "operator-");
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  OperatorSum& operator*=(const Scalar& s) {
    for (auto& [k, c] : terms_) c *= s;
    prune();
    return *this;
  }

  friend OperatorSum operator+(OperatorSum a, const OperatorSum& b) { return a += b; }
  friend OperatorSum operator-(OperatorSum a, const OperatorSum& b) { return a -= b; }
  friend OperatorSum operator-(OperatorSum a) { return a *= Scalar(-1); }
  friend OperatorSum operator*(OperatorSum a, const Scalar& s) { return a *= s; }
  friend OperatorSum operator*(const Scalar& s, OperatorSum a) { return a *= s; }

  /// Operator product.
  friend OperatorSum operator*(const OperatorSum& a, const OperatorSum& b) {
    a.check_same_length(b.n_sites_, "product");
    OperatorSum out(a.n_sites_, a.prune_tol_);
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        Scalar c = ca * cb;
        if (product_sign(ka, kb) < 0) c = -c;
        out.add(PauliKey{ka.x ^ kb.x, ka.z ^ kb.z}, c);
      }
    }
    return out;
  }

  friend bool operator==(const OperatorSum& a, const OperatorSum& b) {
    return a.n_sites_ == b.n_sites_ && a.terms_ == b.terms_;
  }

  /// Hermitian conjugate: (X^x Z^z)^dagger = (-1)^{|x & z|} X^x Z^z.
  OperatorSum adjoint() const {
    OperatorSum out(n_sites_, prune_tol_);
    for (const auto& [k, c] : terms_) {
      Scalar cc = Traits::conj(c);
      out.terms_.emplace(k, k.y_count() & 1 ? Scalar(-cc) : cc);
    }
    return out;
  }

  bool is_hermitian(double tol = 1e-12) const {
    for (const auto& [k, c] : terms_) {
      Scalar cc = Traits::conj(c);
      Scalar expected = k.y_count() & 1 ? Scalar(-cc) : cc;
      if (Traits::magnitude(expected - c) > tol) return false;
    }
    return true;
  }

  /// Every term with its coefficient converted to another ring.
  template <class Other, class Convert>
  OperatorSum<Other> transform(Convert&& convert,
                               double prune_tol = ScalarTraits<Other>::kDefaultPruneTol) const {
    OperatorSum<Other> out(n_sites_, prune_tol);
    for (const auto& [k, c] : terms_) out.add(k, convert(c));
    return out;
  }

  void check_same_length(int n, const char* what) const {
    if (n != n_sites_) {
      throw DimensionError(std::string(what) + ": length mismatch (" + std::to_string(n_sites_) +
                           " vs " + std::to_string(n) + ")");
    }
  }

 private:
  int n_sites_;
  double prune_tol_;
  Terms terms_;
};

/// [a, b] = ab - ba. Commuting term pairs are skipped; an anticommuting pair
/// contributes 2 PQ.
template <class S>
OperatorSum<S> commutator(const OperatorSum<S>& a, const OperatorSum<S>& b) {
  a.check_same_length(b.n_sites(), "commutator");
  OperatorSum<S> out(a.n_sites(), a.prune_tolerance());
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      if (keys_commute(ka, kb)) continue;
      S c = S(2) * ca * cb;
      if (product_sign(ka, kb) < 0) c = -c;
      out.add(PauliKey{ka.x ^ kb.x, ka.z ^ kb.z}, c);
    }
  }
  return out;
}

/// Tr(a^dagger b) / 2^L, evaluated termwise over shared keys.
template <class S>
S trace_inner_product(const OperatorSum<S>& a, const OperatorSum<S>& b) {
  a.check_same_length(b.n_sites(), "trace_inner_product");
  S acc(0);
  const OperatorSum<S>& small = a.size() <= b.size() ? a : b;
  const OperatorSum<S>& large = a.size() <= b.size() ? b : a;
  for (const auto& [k, c] : small) {
    auto it = large.terms().find(k);
    if (it == large.terms().end()) continue;
    const S& ca = &small == &a ? c : it->second;
    const S& cb = &small == &a ? it->second : c;
    acc += ScalarTraits<S>::conj(ca) * cb;
  }
  return acc;
}

/// Tr(a^dagger a) / 2^L.
template <class S>
S norm_squared(const OperatorSum<S>& a) {
  S acc(0);
  for (const auto& [k, c] : a) acc += ScalarTraits<S>::conj(c) * c;
  return acc;
}

/// True iff [g, op] = 0. Distinct terms of op stay distinct after
/// multiplication by g, so no cancellation between terms can occur.
template <class S>
bool is_symmetric(const OperatorSum<S>& op, const PauliString& g) {
  op.check_same_length(g.n_sites(), "is_symmetric");
  for (const auto& [k, c] : op) {
    if (!keys_commute(k, g.key())) return false;
  }
  return true;
}

inline bool is_symmetric(const PauliString& p, const PauliString& g) { return commutes(p, g); }

inline OperatorSum<Complex> to_complex(const OperatorSum<double>& a) {
  return a.template transform<Complex>([](double c) { return Complex(c, 0.0); }, a.prune_tolerance());
}
inline const OperatorSum<Complex>& to_complex(const OperatorSum<Complex>& a) { return a; }

/// Real part of every coefficient; throws if an imaginary part exceeds tol.
inline OperatorSum<double> to_real(const OperatorSum<Complex>& a, double tol = 1e-12) {
  return a.transform<double>(
      [&](const Complex& c) {
        if (std::abs(c.imag()) > tol) throw DomainError("operator has complex coefficients");
        return c.real();
      },
      a.prune_tolerance());
}

// ---------------------------------------------------------------------------
// Text format: one term per line, "(coefficient) F1 F2 ...", e.g.
//   (-0.05) X1 X2
//   (1) Z2 X3 Z4
// Factors are written with explicit Y, so the printed coefficient is the
// stored one times (-i)^{#Y}. A complex coefficient is written "(re,im)".
// Blank lines and lines starting with '#' are ignored.

namespace detail {

inline std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
  std::string tmp(s);
  char* end = nullptr;
  double v = std::strtod(tmp.c_str(), &end);
  if (tmp.empty() || end != tmp.c_str() + tmp.size()) {
    throw ParseError("invalid number \"" + tmp + "\"");
  }
  return v;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline std::string format_coefficient(const Complex& c) {
  if (c.imag() == 0.0) return "(" + detail::format_double(c.real()) + ")";
  return "(" + detail::format_double(c.real()) + "," + detail::format_double(c.imag()) + ")";
}

template <class S>
std::string to_text(const OperatorSum<S>& op) {
  static constexpr Complex kMinusIPowers[] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  std::string out;
  for (const auto& [k, c] : op) {
    Complex shown = ScalarTraits<S>::to_complex(c) * kMinusIPowers[k.y_count() & 3];
    PauliString p(op.n_sites(), k.x, k.z);
    out += format_coefficient(shown);
    std::string factors = p.factor_string();
    if (!factors.empty()) out += " " + factors;
    out += "\n";
  }
  return out;
}

/// Parses the line-oriented term format into a complex OperatorSum.
inline OperatorSum<Complex> operator_from_text(int n_sites, std::string_view text) {
  OperatorSum<Complex> op(n_sites);
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t nl = text.find('\n');
    std::string_view line = detail::trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    try {
      Complex coeff{1.0, 0.0};
      std::string_view rest = line;
      if (line.front() == '(') {
        std::size_t close = line.find(')');
        if (close == std::string_view::npos) throw ParseError("unbalanced parenthesis");
        std::string_view inner = detail::trim(line.substr(1, close - 1));
        std::size_t comma = inner.find(',');
        if (comma == std::string_view::npos) {
          coeff = {detail::parse_double(inner), 0.0};
        } else {
          coeff = {detail::parse_double(detail::trim(inner.substr(0, comma))),
                   detail::parse_double(detail::trim(inner.substr(comma + 1)))};
        }
        rest = line.substr(close + 1);
      }
      op.add(PauliString::parse(n_sites, rest), coeff);
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return op;
}

/// Largest site index mentioned in a term file; used to infer L when the
/// caller does not provide it.
inline int max_site_in_text(std::string_view text) {
  int best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if ((c == 'X' || c == 'Y' || c == 'Z') && i + 1 < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      int v = 0;
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        v = v * 10 + (text[j] - '0');
        ++j;
      }
      best = std::max(best, v);
    }
  }
  return best;
}

}  // namespace edgequbit
