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
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iostream>
#include <memory>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "edgequbit/dense.hpp"
#include "edgequbit/errors.hpp"
#include "edgequbit/models.hpp"
#include "edgequbit/operator_sum.hpp"

namespace edgequbit {

// ---------------------------------------------------------------------------
// Symmetry sectors of commuting X-type symmetries.
//
// With independent X-strings m_1..m_k commuting with H, every orbit
// {r ^ g} of a basis state has 2^k elements. For a sector label `chi`
// (bit i set <=> eigenvalue -1 of m_i) the states
//   |r, chi> = 2^{-k/2} sum_g chi(g) |r ^ g>
// over orbit representatives r form an orthonormal basis of the sector.

class SectorBasis {
 public:
  SectorBasis(int L, std::vector<Mask> generators) : L_(L), generators_(std::move(generators)) {
    if (L < 1 || L > 30) throw SizeError("SectorBasis: unsupported chain length");
    const int k = static_cast<int>(generators_.size());
    const std::size_t dim = std::size_t{1} << L;
    element_mask_.assign(std::size_t{1} << k, 0);
    for (std::size_t e = 0; e < element_mask_.size(); ++e) {
      for (int i = 0; i < k; ++i) {
        if ((e >> i) & 1) element_mask_[e] ^= generators_[static_cast<std::size_t>(i)];
      }
    }
    for (std::size_t e = 1; e < element_mask_.size(); ++e) {
      if (element_mask_[e] == 0) throw DomainError("SectorBasis: generators are not independent");
    }
    orbit_of_.assign(dim, UINT32_MAX);
    element_of_.assign(dim, 0);
    for (std::size_t s = 0; s < dim; ++s) {
      if (orbit_of_[s] != UINT32_MAX) continue;
      // s is the smallest member of its orbit because states are visited in order.
      const auto idx = static_cast<std::uint32_t>(reps_.size());
      reps_.push_back(s);
      for (std::size_t e = 0; e < element_mask_.size(); ++e) {
        const std::size_t t = s ^ element_mask_[e];
        orbit_of_[t] = idx;
        element_of_[t] = static_cast<std::uint32_t>(e);
      }
    }
  }

  static SectorBasis trivial(int L) { return SectorBasis(L, {}); }

  int L() const { return L_; }
  const std::vector<Mask>& generators() const { return generators_; }
  unsigned num_sectors() const { return 1u << generators_.size(); }
  std::size_t sector_dimension() const { return reps_.size(); }
  const std::vector<Mask>& representatives() const { return reps_; }

  std::uint32_t orbit_of(Mask s) const { return orbit_of_[s]; }
  std::uint32_t element_of(Mask s) const { return element_of_[s]; }

  /// chi(g) for sector `label` and group element `element`.
  static double character(unsigned label, std::uint32_t element) {
    return parity(static_cast<Mask>(label & element)) ? -1.0 : 1.0;
  }

  /// Label shift produced by a term with z-mask `z`: bit i set iff the term
  /// anticommutes with generator i.
  unsigned label_shift(Mask z) const {
    unsigned eta = 0;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (parity(z & generators_[i])) eta |= 1u << i;
    }
    return eta;
  }

  /// Eigenvalue (+1/-1) of generator i in sector `label`.
  static int charge(unsigned label, std::size_t i) { return (label >> i) & 1 ? -1 : 1; }

 private:
  int L_;
  std::vector<Mask> generators_;
  std::vector<Mask> element_mask_;
  std::vector<Mask> reps_;
  std::vector<std::uint32_t> orbit_of_;
  std::vector<std::uint32_t> element_of_;
};

/// Independent X-strings among {G_e, G_o, prod_i X_i} that commute with H.
template <class S>
std::vector<Mask> find_x_symmetries(const OperatorSum<S>& h) {
  const int L = h.n_sites();
  std::vector<Mask> candidates;
  if (L % 2 == 0 && L >= 4) {
    candidates.push_back(even_sites(L));
    candidates.push_back(odd_sites(L));
  }
  candidates.push_back(low_mask(L));
  std::vector<Mask> chosen;
  for (Mask c : candidates) {
    if (!is_symmetric(h, x_string(L, c))) continue;
    // Reject c when it lies in the span of the chosen generators.
    bool dependent = false;
    const std::size_t n = std::size_t{1} << chosen.size();
    for (std::size_t e = 0; e < n && !dependent; ++e) {
      Mask m = 0;
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        if ((e >> i) & 1) m ^= chosen[i];
      }
      dependent = (m == c);
    }
    if (!dependent) chosen.push_back(c);
  }
  return chosen;
}

namespace detail {

/// Triplets of the block of `op` mapping sector `source` into
/// `source ^ eta(term)`, grouped by target label.
template <class S, class Sink>
void for_each_block_entry(const SectorBasis& basis, const OperatorSum<S>& op, unsigned source,
                          Sink&& sink) {
  const auto& reps = basis.representatives();
  for (const auto& [k, c] : op) {
    const unsigned target = source ^ basis.label_shift(k.z);
    const auto cc = ScalarTraits<S>::to_complex(c);
    for (std::size_t r = 0; r < reps.size(); ++r) {
      const Mask state = reps[r] ^ k.x;
      const double sign = (parity(k.z & reps[r]) ? -1.0 : 1.0) *
                          SectorBasis::character(target, basis.element_of(state));
      sink(target, basis.orbit_of(state), r, sign * cc);
    }
  }
}

inline lapack_int lapack_eigh(Eigen::MatrixXd& a, Eigen::VectorXd& w) {
  const auto n = static_cast<lapack_int>(a.rows());
  return LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'U', n, a.data(), n, w.data());
}

inline lapack_int lapack_eigh(Eigen::MatrixXcd& a, Eigen::VectorXd& w) {
  const auto n = static_cast<lapack_int>(a.rows());
  return LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'U', n, a.data(), n, w.data());
}

/// Randomized O(n^2) check of an eigendecomposition: for a fixed probe
/// vector x, both V^T V x = x and H V x = V (E * x) must hold.
template <class Mat>
bool eigensystem_ok(const Mat& h, const Mat& v, const Eigen::VectorXd& w) {
  const Eigen::Index n = h.rows();
  if (!v.allFinite() || !w.allFinite()) return false;
  using Vec = Eigen::Matrix<typename Mat::Scalar, Eigen::Dynamic, 1>;
  Vec x(n);
  for (Eigen::Index i = 0; i < n; ++i) x[i] = std::cos(0.7 * static_cast<double>(i) + 0.3);
  const Vec vx = v * x;
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff()) * static_cast<double>(n);
  const double orth = (v.adjoint() * vx - x).norm() / x.norm();
  const Vec ex = w.cast<typename Mat::Scalar>().cwiseProduct(x);
  const double eig = (h * vx - v * ex).norm() / x.norm();
  return orth < 1e-8 && eig < 1e-10 * scale;
}

/// Some OpenBLAS builds pick a broken kernel for the host CPU and return
/// eigenvectors that are not orthonormal (OPENBLAS_CORETYPE overrides the
/// choice). The driver is probed once per process; when it fails, or when a
/// later result fails eigensystem_ok, the Eigen solver is used instead.
inline bool lapack_is_reliable() {
  static const bool ok = [] {
    const Eigen::Index n = 160;
    Eigen::MatrixXd h(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j <= i; ++j) {
        h(i, j) = h(j, i) = std::sin(1.3 * static_cast<double>(i * n + j) + 0.1);
      }
    }
    Eigen::MatrixXd v = h;
    Eigen::VectorXd w(n);
    const bool good = lapack_eigh(v, w) == 0 && eigensystem_ok(h, v, w);
    if (!good) {
      std::cerr << "edgequbit: LAPACK eigensolver failed its self-check; using the Eigen "
                   "solver (set OPENBLAS_CORETYPE, e.g. Haswell, to restore the fast path)\n";
    }
    return good;
  }();
  return ok;
}

template <class Mat>
void eigh_inplace(Mat& a, Eigen::VectorXd& w) {
  const Eigen::Index n = a.rows();
  w.resize(n);
  if (n == 0) return;
  if (lapack_is_reliable()) {
    Mat original = a;
    const lapack_int info = lapack_eigh(a, w);
    if (info < 0) throw ConvergenceError("LAPACK eigensolver: invalid argument " + std::to_string(-info));
    if (info == 0 && eigensystem_ok(original, a, w)) return;
    a = std::move(original);
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(a);
  if (es.info() != Eigen::Success) throw ConvergenceError("eigensolver did not converge");
  w = es.eigenvalues();
  a = es.eigenvectors();
}

}  // namespace detail

/// Dense block of a symmetric operator inside one sector.
template <class S>
Eigen::MatrixXcd sector_block(const SectorBasis& basis, const OperatorSum<S>& op, unsigned label) {
  const auto d = static_cast<Eigen::Index>(basis.sector_dimension());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  detail::for_each_block_entry(basis, op, label,
                               [&](unsigned target, std::uint32_t row, std::size_t col, Complex v) {
                                 if (target != label) {
                                   throw DomainError("sector_block: operator leaves the sector");
                                 }
                                 m(row, static_cast<Eigen::Index>(col)) += v;
                               });
  return m;
}

/// Eigen-decomposition of one symmetry sector.
struct SectorSpectrum {
  unsigned label = 0;
  Eigen::VectorXd energies;
  Eigen::MatrixXd vectors;    // real Hamiltonians
  Eigen::MatrixXcd cvectors;  // complex Hamiltonians
  bool is_complex = false;
};

/// Full eigensystem, stored sector by sector.
class Spectrum {
 public:
  Spectrum(std::shared_ptr<const SectorBasis> basis, std::vector<SectorSpectrum> sectors)
      : basis_(std::move(basis)), sectors_(std::move(sectors)) {}

  int L() const { return basis_->L(); }
  std::size_t dimension() const { return std::size_t{1} << basis_->L(); }
  const SectorBasis& basis() const { return *basis_; }
  const std::vector<SectorSpectrum>& sectors() const { return sectors_; }

  /// All eigenvalues in ascending order.
  Eigen::VectorXd eigenvalues() const {
    std::vector<double> all;
    all.reserve(dimension());
    for (const auto& s : sectors_) all.insert(all.end(), s.energies.begin(), s.energies.end());
    std::sort(all.begin(), all.end());
    return Eigen::Map<Eigen::VectorXd>(all.data(), static_cast<Eigen::Index>(all.size()));
  }

  const SectorSpectrum* find(unsigned label) const {
    for (const auto& s : sectors_) {
      if (s.label == label) return &s;
    }
    return nullptr;
  }

 private:
  std::shared_ptr<const SectorBasis> basis_;
  std::vector<SectorSpectrum> sectors_;
};

struct DiagonalizeOptions {
  bool use_symmetries = true;
  int max_L = kDefaultMaxDenseL;
};

/// Exact diagonalization of a Hermitian operator, block by block over the
/// X-type symmetry sectors it admits.
template <class S>
Spectrum diagonalize(const OperatorSum<S>& h, const DiagonalizeOptions& options = {}) {
  detail::check_dense_size(h.n_sites(), options.max_L);
  if (!h.is_hermitian(1e-10)) throw NotHermitianError("diagonalize: operator is not Hermitian");
  auto basis = std::make_shared<const SectorBasis>(
      h.n_sites(), options.use_symmetries ? find_x_symmetries(h) : std::vector<Mask>{});
  const bool real = has_real_matrix(h);
  std::vector<SectorSpectrum> sectors;
  for (unsigned label = 0; label < basis->num_sectors(); ++label) {
    SectorSpectrum sec;
    sec.label = label;
    Eigen::MatrixXcd block = sector_block(*basis, h, label);
    if (real) {
      sec.vectors = block.real();
      detail::eigh_inplace(sec.vectors, sec.energies);
    } else {
      sec.is_complex = true;
      sec.cvectors = std::move(block);
      detail::eigh_inplace(sec.cvectors, sec.energies);
    }
    sectors.push_back(std::move(sec));
  }
  return Spectrum(std::move(basis), std::move(sectors));
}

namespace detail {

inline int dense_chain_length(Eigen::Index rows, Eigen::Index cols) {
  if (rows != cols || rows < 2 || (rows & (rows - 1)) != 0) {
    throw DimensionError("diagonalize: matrix must be square with power-of-two size");
  }
  return std::countr_zero(static_cast<std::uint64_t>(rows));
}

}  // namespace detail

/// Dense real symmetric input, Hermitian within 1e-10.
inline Spectrum diagonalize(const Eigen::MatrixXd& h) {
  const int L = detail::dense_chain_length(h.rows(), h.cols());
  if ((h - h.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw NotHermitianError("diagonalize: matrix is not symmetric");
  }
  SectorSpectrum sec;
  sec.vectors = h;
  detail::eigh_inplace(sec.vectors, sec.energies);
  std::vector<SectorSpectrum> sectors;
  sectors.push_back(std::move(sec));
  return Spectrum(std::make_shared<const SectorBasis>(SectorBasis::trivial(L)),
                  std::move(sectors));
}

/// Dense complex Hermitian input, Hermitian within 1e-10.
inline Spectrum diagonalize(const Eigen::MatrixXcd& h) {
  const int L = detail::dense_chain_length(h.rows(), h.cols());
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw NotHermitianError("diagonalize: matrix is not Hermitian");
  }
  if (h.imag().cwiseAbs().maxCoeff() == 0.0) return diagonalize(Eigen::MatrixXd(h.real()));
  SectorSpectrum sec;
  sec.is_complex = true;
  sec.cvectors = h;
  detail::eigh_inplace(sec.cvectors, sec.energies);
  std::vector<SectorSpectrum> sectors;
  sectors.push_back(std::move(sec));
  return Spectrum(std::make_shared<const SectorBasis>(SectorBasis::trivial(L)),
                  std::move(sectors));
}

// ---------------------------------------------------------------------------
// Infinite-temperature autocorrelators.
//
// For Hermitian A, C(t) = Tr(A(t) A) / 2^L = sum_{mn} |A_mn|^2 cos((E_m - E_n) t) / 2^L
// with A_mn the matrix elements in the eigenbasis. The transitions are
// enumerated block by block: A' = V_target^T (A_block V_source).

/// Calls visit(|omega|, weight) once per unordered eigenpair (m, n) with
/// nonzero transition weight. Weights already include the 1/2^L
/// normalization and the factor 2 for m != n, so they sum to Tr(A A)/2^L.
template <class S, class Visit>
void for_each_transition(const Spectrum& spec, const OperatorSum<S>& a, Visit&& visit) {
  if (a.n_sites() != spec.L()) throw DimensionError("autocorrelator: operator length mismatch");
  if (!a.is_hermitian(1e-12)) throw NotHermitianError("autocorrelator: operator is not Hermitian");
  const SectorBasis& basis = spec.basis();
  const double norm = 1.0 / static_cast<double>(spec.dimension());
  using Triplet = Eigen::Triplet<Complex>;
  for (const SectorSpectrum& src : spec.sectors()) {
    std::vector<std::vector<Triplet>> blocks(basis.num_sectors());
    detail::for_each_block_entry(basis, a, src.label,
                                 [&](unsigned target, std::uint32_t row, std::size_t col, Complex v) {
                                   if (target < src.label) return;
                                   blocks[target].emplace_back(static_cast<int>(row),
                                                               static_cast<int>(col), v);
                                 });
    for (unsigned target = src.label; target < basis.num_sectors(); ++target) {
      if (blocks[target].empty()) continue;
      const SectorSpectrum* dst = spec.find(target);
      if (dst == nullptr) continue;
      const auto d = static_cast<int>(basis.sector_dimension());
      Eigen::SparseMatrix<Complex> b(d, d);
      b.setFromTriplets(blocks[target].begin(), blocks[target].end());
      const double fold = target == src.label ? 1.0 : 2.0;
      const Eigen::Index n_dst = dst->energies.size();
      const Eigen::Index n_src = src.energies.size();
      auto emit = [&](const auto& weights) {
        for (Eigen::Index n = 0; n < n_src; ++n) {
          for (Eigen::Index m = 0; m < n_dst; ++m) {
            if (target == src.label && m > n) continue;
            double w = weights(m, n) * norm * fold;
            if (target == src.label && m != n) w *= 2.0;
            if (w == 0.0) continue;
            visit(std::abs(dst->energies[m] - src.energies[n]), w);
          }
        }
      };
      if (!src.is_complex && !dst->is_complex) {
        Eigen::SparseMatrix<double> br = b.real();
        Eigen::SparseMatrix<double> bi = b.imag();
        br.prune(0.0);
        bi.prune(0.0);
        Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n_dst, n_src);
        if (br.nonZeros() > 0) {
          Eigen::MatrixXd t = br * src.vectors;
          w += (dst->vectors.transpose() * t).cwiseAbs2();
        }
        if (bi.nonZeros() > 0) {
          Eigen::MatrixXd t = bi * src.vectors;
          w += (dst->vectors.transpose() * t).cwiseAbs2();
        }
        emit(w);
      } else {
        Eigen::MatrixXcd vs = src.is_complex ? src.cvectors : src.vectors.cast<Complex>();
        Eigen::MatrixXcd vd = dst->is_complex ? dst->cvectors : dst->vectors.cast<Complex>();
        Eigen::MatrixXcd t = b * vs;
        Eigen::MatrixXd w = (vd.adjoint() * t).cwiseAbs2();
        emit(w);
      }
    }
  }
}

/// Transition weights binned in |omega| with uniform width. Bin 0, the DC
/// bin, collects every pair with |omega| < width / 2 and is evaluated at
/// exactly zero frequency: it is the t -> infinity plateau. Every other
/// occupied bin k covers [(k - 1/2) width, (k + 1/2) width) and is evaluated
/// at the weighted mean frequency of its members, damped by the weighted
/// frequency variance var_k as exp(-var_k t^2 / 2). The damping is below
/// 1e-4 relative while t * width <= 0.02 and models the dephasing of
/// unresolved frequencies beyond that.
class SpectralWeightHistogram {
 public:
  SpectralWeightHistogram() = default;

  struct Entry {
    std::int64_t bin;
    double weight;
    double omega;
  };

  /// Entries need not be sorted.
  SpectralWeightHistogram(double bin_width, std::vector<Entry> entries)
      : bin_width_(bin_width) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) {
                return a.bin != b.bin ? a.bin < b.bin : a.omega < b.omega;
              });
    Level base;
    for (const Entry& e : entries) {
      if (e.bin == 0) {
        dc_weight_ += e.weight;
        continue;
      }
      if (index_.empty() || index_.back() != e.bin) {
        index_.push_back(e.bin);
        base.weight.push_back(0.0);
        base.moment.push_back(0.0);
        base.moment2.push_back(0.0);
      }
      base.weight.back() += e.weight;
      base.moment.back() += e.weight * e.omega;
      base.moment2.back() += e.weight * e.omega * e.omega;
    }
    base.finalize();
    levels_.push_back(std::move(base));
    // Coarser levels: level l merges base bins by index >> l.
    for (int l = 1; l < 62 && levels_.back().weight.size() > 1; ++l) {
      Level next;
      std::int64_t last = -1;
      for (std::size_t i = 0; i < index_.size(); ++i) {
        const std::int64_t key = index_[i] >> l;
        if (key != last) {
          next.weight.push_back(0.0);
          next.moment.push_back(0.0);
          next.moment2.push_back(0.0);
          last = key;
        }
        const double w = levels_[0].weight[i];
        const double f = levels_[0].frequency[i];
        next.weight.back() += w;
        next.moment.back() += w * f;
        next.moment2.back() += w * (f * f + levels_[0].variance[i]);
      }
      next.finalize();
      levels_.push_back(std::move(next));
    }
  }

  double bin_width() const { return bin_width_; }
  double dc_weight() const { return dc_weight_; }
  std::size_t num_bins() const { return index_.size(); }
  const std::vector<std::int64_t>& bin_indices() const { return index_; }
  const std::vector<double>& weights() const { return levels_.at(0).weight; }
  const std::vector<double>& frequencies() const { return levels_.at(0).frequency; }
  const std::vector<double>& variances() const { return levels_.at(0).variance; }

  double lower_edge(std::int64_t k) const {
    return k == 0 ? 0.0 : (static_cast<double>(k) - 0.5) * bin_width_;
  }
  double upper_edge(std::int64_t k) const { return (static_cast<double>(k) + 0.5) * bin_width_; }

  double total_weight() const {
    double s = dc_weight_;
    if (!levels_.empty()) {
      for (double w : levels_[0].weight) s += w;
    }
    return s;
  }

  /// C(t) = w_DC + sum_k w_k cos(omega_k t) exp(-var_k t^2 / 2). For each t
  /// the coarsest level with (level width) * |t| <= phase_tolerance is used;
  /// the error of that merge is at most phase_tolerance^2 / 8 times the total
  /// weight. Times beyond phase_tolerance / bin_width use the base level.
  double evaluate(double t, double phase_tolerance = 0.02) const {
    t = std::abs(t);
    double sum = dc_weight_;
    if (levels_.empty()) return sum;
    std::size_t level = 0;
    while (level + 1 < levels_.size() &&
           std::ldexp(bin_width_, static_cast<int>(level + 1)) * t <= phase_tolerance) {
      ++level;
    }
    const Level& lv = levels_[level];
    for (std::size_t i = 0; i < lv.weight.size(); ++i) {
      const double damp = lv.variance[i] > 0.0 ? std::exp(-0.5 * lv.variance[i] * t * t) : 1.0;
      sum += lv.weight[i] * std::cos(lv.frequency[i] * t) * damp;
    }
    return sum;
  }

 private:
  struct Level {
    std::vector<double> weight;
    std::vector<double> moment;
    std::vector<double> moment2;
    std::vector<double> frequency;
    std::vector<double> variance;
    void finalize() {
      frequency.resize(weight.size());
      variance.resize(weight.size());
      for (std::size_t i = 0; i < weight.size(); ++i) {
        frequency[i] = weight[i] > 0.0 ? moment[i] / weight[i] : 0.0;
        variance[i] = weight[i] > 0.0
                          ? std::max(0.0, moment2[i] / weight[i] - frequency[i] * frequency[i])
                          : 0.0;
      }
      moment = {};
      moment2 = {};
    }
  };

  double bin_width_ = 1e-6;
  double dc_weight_ = 0.0;
  std::vector<std::int64_t> index_;
  std::vector<Level> levels_;
};

struct AutocorrOptions {
  double bin_width = 1e-6;
  double phase_tolerance = 0.02;
  /// Evaluate every eigenpair individually instead of through the histogram.
  bool exact = false;
  /// Weights below this fraction of C(0) are dropped (numerical zeros).
  double weight_cutoff = 1e-20;
};

template <class S>
SpectralWeightHistogram spectral_weights(const Spectrum& spec, const OperatorSum<S>& a,
                                         const AutocorrOptions& options = {}) {
  if (!(options.bin_width > 0.0)) throw DomainError("bin width must be positive");
  const double cutoff = options.weight_cutoff * std::abs(ScalarTraits<S>::to_complex(norm_squared(a)));
  std::vector<SpectralWeightHistogram::Entry> entries;
  for_each_transition(spec, a, [&](double omega, double w) {
    if (w < cutoff) return;
    entries.push_back({std::llround(omega / options.bin_width), w, omega});
  });
  return SpectralWeightHistogram(options.bin_width, std::move(entries));
}

/// Sampled C(t).
struct AutocorrSeries {
  std::vector<double> times;
  std::vector<double> values;
  double c0 = 0.0;
  double plateau = 0.0;  // DC-bin weight, the t -> infinity value
  std::string label;
  std::string model;
};

/// Log-spaced grid of `points` times from t_min to t_max inclusive.
inline std::vector<double> log_time_grid(double t_min = 1e-1, double t_max = 1e5, int points = 400) {
  if (!(t_min > 0.0) || !(t_max > t_min) || points < 2) {
    throw DomainError("log_time_grid: need 0 < t_min < t_max and at least 2 points");
  }
  std::vector<double> t(static_cast<std::size_t>(points));
  const double a = std::log(t_min);
  const double b = std::log(t_max);
  for (int i = 0; i < points; ++i) {
    t[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (points - 1));
  }
  t.front() = t_min;
  t.back() = t_max;
  return t;
}

template <class S>
AutocorrSeries autocorrelator(const Spectrum& spec, const OperatorSum<S>& a,
                              const std::vector<double>& times,
                              const AutocorrOptions& options = {}) {
  AutocorrSeries out;
  out.times = times;
  out.values.reserve(times.size());
  out.c0 = std::abs(ScalarTraits<S>::to_complex(norm_squared(a)));
  for (double t : times) {
    if (!std::isfinite(t)) throw DomainError("autocorrelator: non-finite time");
  }
  if (options.exact) {
    std::vector<std::pair<double, double>> pairs;
    double plateau = 0.0;
    for_each_transition(spec, a, [&](double omega, double w) {
      pairs.emplace_back(omega, w);
      if (omega < 0.5 * options.bin_width) plateau += w;
    });
    out.plateau = plateau;
    for (double t : times) {
      double c = 0.0;
      for (const auto& [omega, w] : pairs) c += w * std::cos(omega * t);
      out.values.push_back(c);
    }
    return out;
  }
  const SpectralWeightHistogram hist = spectral_weights(spec, a, options);
  out.plateau = hist.dc_weight();
  for (double t : times) out.values.push_back(hist.evaluate(t, options.phase_tolerance));
  return out;
}

template <class S>
AutocorrSeries autocorrelator(const Spectrum& spec, const OperatorSum<S>& a) {
  return autocorrelator(spec, a, log_time_grid());
}

}  // namespace edgequbit
