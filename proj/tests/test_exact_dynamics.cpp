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

#include <map>
#include <random>

#include <gtest/gtest.h>

#include "edgequbit/dense.hpp"
#include "edgequbit/exact_dynamics.hpp"
#include "edgequbit/models.hpp"
#include "oracles.hpp"

using namespace edgequbit;

namespace {

OperatorSum<double> as_sum(const PauliString& p) { return OperatorSum<double>(p, 1.0); }

}  // namespace

TEST(Diagonalize, IsingClassicalSpectrum) {
  // Three ZZ bonds: energies -sum of three +-1 bond values, each pattern
  // realized by 2 spin configurations.
  const Spectrum s = diagonalize(build_ising(ChainModel::ising(4, 1.0, 0.0, 0.0)));
  std::map<long, int> counts;
  for (double e : s.eigenvalues()) counts[std::lround(e)]++;
  const std::map<long, int> expected{{-3, 2}, {-1, 6}, {1, 6}, {3, 2}};
  EXPECT_EQ(counts, expected);
}

TEST(Diagonalize, SectorsReproduceDenseSpectrum) {
  const std::vector<ChainModel> models = {
      ChainModel::zxz(8, 1.0, 0.6, 0.2, 0.15), ChainModel::ising(7, 1.0, 0.4, 0.1),
      ChainModel::dual_ising(8, 0.8, 1.3, 0.3, 0.1), ChainModel::floquet(7, 1.0, 2.0, 2.68, 1.2, 0.3)};
  for (const auto& m : models) {
    const auto h = build_hamiltonian(m);
    const Spectrum s = diagonalize(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(to_dense(h));
    ASSERT_EQ(s.eigenvalues().size(), ref.eigenvalues().size());
    EXPECT_LT((s.eigenvalues() - ref.eigenvalues()).cwiseAbs().maxCoeff(), 1e-10)
        << family_name(m.family);
    if (m.family == Family::kZXZ) {
      EXPECT_EQ(s.basis().num_sectors(), 4u);
    }
  }
}

TEST(Diagonalize, EigenvectorsReconstructSectorBlocks) {
  const auto h = build_zxz(ChainModel::zxz(8, 1.0, 0.7, 0.25, 0.1));
  const Spectrum s = diagonalize(h);
  for (const auto& sec : s.sectors()) {
    const Eigen::MatrixXd block = sector_block(s.basis(), h, sec.label).real();
    const Eigen::MatrixXd rebuilt = sec.vectors * sec.energies.asDiagonal() * sec.vectors.transpose();
    EXPECT_LT((block - rebuilt).cwiseAbs().maxCoeff(), 1e-10);
    const auto n = sec.vectors.rows();
    EXPECT_LT((sec.vectors.transpose() * sec.vectors - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(),
              1e-10);
  }
}

TEST(Diagonalize, DenseInputs) {
  Eigen::MatrixXd h = to_dense_real(build_ising(ChainModel::ising(5, 1.0, 0.5, 0.0)));
  const Spectrum s = diagonalize(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(h);
  EXPECT_LT((s.eigenvalues() - ref.eigenvalues()).cwiseAbs().maxCoeff(), 1e-10);
  Eigen::MatrixXd bad = h;
  bad(0, 1) += 1e-6;
  EXPECT_THROW(diagonalize(bad), NotHermitianError);
  EXPECT_THROW(diagonalize(Eigen::MatrixXd(Eigen::MatrixXd::Identity(6, 6))), DimensionError);
  Eigen::MatrixXcd hc = to_dense(build_ising(ChainModel::ising(4, 1.0, 0.5, 0.0)));
  hc += Eigen::MatrixXcd(oracle::site_op(4, 2, 'Y')) * 0.3;
  const Spectrum sc = diagonalize(hc);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> refc(hc);
  EXPECT_LT((sc.eigenvalues() - refc.eigenvalues()).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Diagonalize, RejectsNonHermitianAndLargeInputs) {
  OperatorSum<Complex> h(4);
  h.add(PauliString::parse(4, "X1"), Complex(0, 1));
  EXPECT_THROW(diagonalize(h), NotHermitianError);
  OperatorSum<double> big(PauliString::parse(20, "X1"), 1.0);
  EXPECT_THROW(diagonalize(big), SizeError);
}

TEST(Autocorrelator, ExactPathMatchesMatrixExponentialOracle) {
  const int L = 6;
  const auto h = build_zxz(ChainModel::zxz(L, 1.0, 0.55, 0.3, 0.2));
  const Spectrum s = diagonalize(h);
  const Eigen::MatrixXcd hd = to_dense(h);
  const std::vector<double> times = {0.0, 0.37, 2.5, 13.0, 101.0};
  AutocorrOptions exact;
  exact.exact = true;
  const EdgeOperators e = edge_operators(L);
  for (const PauliString& a : {e.sigma_z, e.sigma_x, e.sigma_y, bulk_reference(L)}) {
    const AutocorrSeries c = autocorrelator(s, OperatorSum<Complex>(a), times, exact);
    const Eigen::MatrixXcd ad = to_dense(a);
    for (std::size_t i = 0; i < times.size(); ++i) {
      EXPECT_NEAR(c.values[i], oracle::autocorrelation(hd, ad, times[i]), 1e-10)
          << a.to_string() << " t=" << times[i];
    }
    EXPECT_NEAR(c.values[0], 1.0, 1e-12);
  }
}

TEST(Autocorrelator, ComplexHamiltonianPath) {
  const int L = 5;
  OperatorSum<Complex> h = to_complex(build_ising(ChainModel::ising(L, 1.0, 0.7, 0.2)));
  h.add(PauliString::parse(L, "Y2 Z3"), Complex(0.3, 0.0));
  h.add(PauliString::parse(L, "Y4"), Complex(0.2, 0.0));
  const Spectrum s = diagonalize(h);
  AutocorrOptions exact;
  exact.exact = true;
  const auto a = as_sum(PauliString::parse(L, "Z1"));
  const AutocorrSeries c = autocorrelator(s, a, {0.0, 1.3, 7.0}, exact);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(c.values[i], oracle::autocorrelation(to_dense(h), to_dense(a), c.times[i]), 1e-10);
  }
}

TEST(Autocorrelator, HistogramWithinBinningError) {
  const int L = 8;
  const auto h = build_zxz(ChainModel::zxz(L, 1.0, 0.5, 0.25, 0.25));
  const Spectrum s = diagonalize(h);
  const auto a = as_sum(edge_operators(L).sigma_z);
  const auto times = log_time_grid(1e-1, 1e5, 60);
  AutocorrOptions exact;
  exact.exact = true;
  const AutocorrSeries ref = autocorrelator(s, a, times, exact);
  const AutocorrSeries binned = autocorrelator(s, a, times);
  for (std::size_t i = 0; i < times.size(); ++i) {
    EXPECT_NEAR(binned.values[i], ref.values[i], 5e-5) << "t=" << times[i];
  }
  EXPECT_NEAR(binned.plateau, ref.plateau, 1e-12);
}

TEST(Autocorrelator, WeightsSumToNormAndArePositive) {
  const int L = 8;
  const auto h = build_zxz(ChainModel::zxz(L, 1.0, 0.8, 0.3, 0.1));
  const Spectrum s = diagonalize(h);
  OperatorSum<double> a(L);
  a.add(PauliString::parse(L, "Z1"), 0.6);
  a.add(PauliString::parse(L, "X1 Z2"), 0.8);
  const auto hist = spectral_weights(s, a);
  EXPECT_NEAR(hist.total_weight(), norm_squared(a), 1e-10);
  EXPECT_GE(hist.dc_weight(), 0.0);
  for (double w : hist.weights()) EXPECT_GT(w, 0.0);
  for (std::size_t i = 0; i < hist.num_bins(); ++i) {
    const auto k = hist.bin_indices()[i];
    EXPECT_GE(hist.frequencies()[i], hist.lower_edge(k) - 1e-12);
    EXPECT_LT(hist.frequencies()[i], hist.upper_edge(k) + 1e-12);
  }
  EXPECT_NEAR(hist.evaluate(0.0), norm_squared(a), 1e-10);
}

TEST(Autocorrelator, ConservedOperatorIsConstant) {
  const int L = 8;
  const auto h = build_zxz(ChainModel::zxz(L, 1.0, 0.8, 0.3, 0.1));
  const Spectrum s = diagonalize(h);
  const auto g = as_sum(symmetry_operators(L).g_even);
  const AutocorrSeries c = autocorrelator(s, g, {0.0, 10.0, 1e4});
  for (double v : c.values) EXPECT_NEAR(v, 1.0, 1e-10);
  EXPECT_NEAR(c.plateau, 1.0, 1e-10);
}

TEST(Autocorrelator, Errors) {
  const Spectrum s = diagonalize(build_ising(ChainModel::ising(4, 1.0, 0.5, 0.0)));
  EXPECT_THROW(autocorrelator(s, as_sum(PauliString::parse(5, "Z1")), {1.0}), DimensionError);
  OperatorSum<Complex> nh(4);
  nh.add(PauliString::parse(4, "Z1"), Complex(0, 1));
  EXPECT_THROW(autocorrelator(s, nh, {1.0}), NotHermitianError);
  EXPECT_THROW(log_time_grid(0.0, 1.0, 10), DomainError);
  AutocorrOptions bad;
  bad.bin_width = 0.0;
  EXPECT_THROW(spectral_weights(s, as_sum(PauliString::parse(4, "Z1")), bad), DomainError);
}

TEST(Autocorrelator, TimeGrid) {
  const auto t = log_time_grid();
  ASSERT_EQ(t.size(), 400u);
  EXPECT_DOUBLE_EQ(t.front(), 0.1);
  EXPECT_DOUBLE_EQ(t.back(), 1e5);
  for (std::size_t i = 1; i < t.size(); ++i) EXPECT_GT(t[i], t[i - 1]);
}
