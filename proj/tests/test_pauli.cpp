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

#include <random>

#include <gtest/gtest.h>

#include "edgequbit/dense.hpp"
#include "edgequbit/duality.hpp"
#include "edgequbit/models.hpp"
#include "edgequbit/operator_sum.hpp"
#include "edgequbit/pauli.hpp"
#include "oracles.hpp"

using namespace edgequbit;

namespace {

PauliString from_letters(const std::string& letters) {
  const int L = static_cast<int>(letters.size());
  PauliString p(L);
  for (int i = 0; i < L; ++i) {
    if (letters[static_cast<std::size_t>(i)] != 'I') {
      p = p * PauliString::single(L, i + 1, letters[static_cast<std::size_t>(i)]);
    }
  }
  return p;
}

double max_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(PauliString, SingleSiteMatricesMatchKroneckerOracle) {
  for (char op : {'X', 'Y', 'Z'}) {
    for (int site = 1; site <= 4; ++site) {
      EXPECT_LT(max_diff(to_dense(PauliString::single(4, site, op)), oracle::site_op(4, site, op)),
                1e-14);
    }
  }
}

TEST(PauliString, RandomStringsMatchOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string letters = oracle::random_letters(rng, 5);
    EXPECT_LT(max_diff(to_dense(from_letters(letters)), oracle::string_matrix(letters)), 1e-14)
        << letters;
  }
}

TEST(PauliString, ProductAndCommutationMatchOracle) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string a = oracle::random_letters(rng, 4);
    const std::string b = oracle::random_letters(rng, 4);
    const PauliString p = from_letters(a);
    const PauliString q = from_letters(b);
    const Eigen::MatrixXcd ma = oracle::string_matrix(a);
    const Eigen::MatrixXcd mb = oracle::string_matrix(b);
    EXPECT_LT(max_diff(to_dense(p * q), ma * mb), 1e-14);
    const bool dense_commute = (ma * mb - mb * ma).cwiseAbs().maxCoeff() < 1e-12;
    EXPECT_EQ(commutes(p, q), dense_commute);
    EXPECT_LT(max_diff(to_dense(inverse(p)) * ma, Eigen::MatrixXcd::Identity(16, 16)), 1e-14);
    EXPECT_TRUE(p.is_hermitian());
  }
}

TEST(PauliString, ParseAndFormat) {
  EXPECT_EQ(PauliString::parse(4, "Z1 X2 Z3").to_string(), "+Z1 X2 Z3");
  EXPECT_EQ(PauliString::parse(4, "Y1 Z2").to_string(), "+Y1 Z2");
  EXPECT_EQ(PauliString(4).to_string(), "+I");
  const PauliString y = PauliString::single(3, 2, 'Y');
  EXPECT_EQ(y.to_string(), "+Y2");
  EXPECT_EQ((PauliString::single(3, 1, 'X') * PauliString::single(3, 1, 'Z')).to_string(), "-i Y1");
  EXPECT_EQ(PauliString::parse(6, "X1 Z2 X3").support(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(weight(PauliString::parse(6, "X1 Y4")), 2);
  EXPECT_THROW(PauliString::parse(4, "Q1"), ParseError);
  EXPECT_THROW(PauliString::parse(4, "X5"), DimensionError);
  EXPECT_THROW(PauliString::single(4, 0, 'X'), DimensionError);
  EXPECT_THROW(PauliString::parse(4, "X1") * PauliString::parse(5, "X1"), DimensionError);
}

TEST(OperatorSum, ArithmeticMatchesDenseOracle) {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> g;
  auto random_sum = [&](int terms) {
    OperatorSum<Complex> s(4);
    for (int i = 0; i < terms; ++i) s.add(from_letters(oracle::random_letters(rng, 4)), Complex(g(rng), g(rng)));
    return s;
  };
  for (int trial = 0; trial < 30; ++trial) {
    const OperatorSum<Complex> a = random_sum(5);
    const OperatorSum<Complex> b = random_sum(6);
    const Eigen::MatrixXcd ma = to_dense(a);
    const Eigen::MatrixXcd mb = to_dense(b);
    EXPECT_LT(max_diff(to_dense(a * b), ma * mb), 1e-12);
    EXPECT_LT(max_diff(to_dense(a + b), ma + mb), 1e-12);
    EXPECT_LT(max_diff(to_dense(commutator(a, b)), ma * mb - mb * ma), 1e-12);
    EXPECT_LT(max_diff(to_dense(a.adjoint()), ma.adjoint()), 1e-12);
    const Complex tr = (ma.adjoint() * mb).trace() / 16.0;
    EXPECT_LT(std::abs(trace_inner_product(a, b) - tr), 1e-12);
  }
}

TEST(OperatorSum, HermitianProperty) {
  OperatorSum<Complex> a(3);
  a.add(PauliString::parse(3, "X1 Z2"), Complex(0.5, 0));
  EXPECT_TRUE(a.is_hermitian());
  a.add(PauliString::parse(3, "Z3"), Complex(0, 0.25));
  EXPECT_FALSE(a.is_hermitian());
  // i X Z is Hermitian (it equals Y up to sign).
  OperatorSum<Complex> y(2);
  y.add(PauliKey{1, 1}, Complex(0, 1));
  EXPECT_TRUE(y.is_hermitian());
}

TEST(OperatorSum, TextRoundTrip) {
  std::mt19937_64 rng(14);
  std::normal_distribution<double> g;
  OperatorSum<Complex> a(6);
  for (int i = 0; i < 12; ++i) a.add(from_letters(oracle::random_letters(rng, 6)), Complex(g(rng), g(rng)));
  const std::string text = to_text(a);
  const OperatorSum<Complex> back = operator_from_text(6, text);
  EXPECT_EQ(back, a);
  EXPECT_EQ(max_site_in_text(text), static_cast<int>(std::bit_width(a.support_mask())));
  EXPECT_THROW(operator_from_text(6, "(1) X9\n"), ParseError);
  EXPECT_THROW(operator_from_text(6, "(1 X1\n"), ParseError);
}

TEST(OperatorSum, CommutatorAlgebraIdentities) {
  std::mt19937_64 rng(15);
  std::normal_distribution<double> g;
  auto random_sum = [&]() {
    OperatorSum<Complex> s(5);
    for (int i = 0; i < 4; ++i) s.add(from_letters(oracle::random_letters(rng, 5)), Complex(g(rng), g(rng)));
    return s;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_sum();
    const auto b = random_sum();
    const auto c = random_sum();
    EXPECT_EQ((commutator(a, b) + commutator(b, a)).size(), 0u);
    const auto jacobi = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                        commutator(c, commutator(a, b));
    for (const auto& [k, v] : jacobi) EXPECT_LT(std::abs(v), 1e-10);
  }
}

TEST(Duality, DenseUnitaryConjugatesZxzIntoDualIsing) {
  for (int L : {6, 8}) {
    const DualityContext ctx(L);
    const Eigen::MatrixXcd u = dense_duality_unitary(ctx).cast<Complex>();
    EXPECT_LT(max_diff(u * u.adjoint(), Eigen::MatrixXcd::Identity(u.rows(), u.cols())), 1e-12);
    const auto hz = build_zxz(ChainModel::zxz(L, 1.1, 0.7, 0.23, 0.31));
    const auto hd = build_dual_ising(ChainModel::dual_ising(L, 1.1, 0.7, 0.23, 0.31));
    EXPECT_LT(max_diff(u * to_dense(hz) * u.adjoint(), to_dense(hd)), 1e-12) << "L=" << L;
    EXPECT_EQ(dualize(hz, ctx), hd);
  }
}

TEST(Duality, StringImagesMatchDenseConjugation) {
  const int L = 8;
  const DualityContext ctx(L);
  const Eigen::MatrixXcd u = dense_duality_unitary(ctx).cast<Complex>();
  std::mt19937_64 rng(16);
  const PauliString ge = symmetry_operators(L).g_even;
  const PauliString go = symmetry_operators(L).g_odd;
  int checked = 0;
  while (checked < 100) {
    const PauliString p = from_letters(oracle::random_letters(rng, L));
    if (!commutes(p, ge) || !commutes(p, go)) continue;
    EXPECT_LT(max_diff(u * to_dense(p) * u.adjoint(), to_dense(dualize(p, ctx))), 1e-12)
        << p.to_string();
    ++checked;
  }
}

TEST(Duality, EdgeOperatorImages) {
  for (int L : {6, 8, 12}) {
    const DualityContext ctx(L);
    const EdgeOperators e = edge_operators(L);
    const EdgeOperators d = dual_edge_operators(L);
    EXPECT_EQ(dualize(e.sigma_z, ctx), d.sigma_z);
    EXPECT_EQ(dualize(e.sigma_x, ctx), d.sigma_x);
    EXPECT_EQ(dualize(e.sigma_y, ctx), d.sigma_y);
    EXPECT_EQ(d.sigma_x.to_string().substr(0, 1), "+");
    // Edge algebra: pairwise anticommuting, sigma^x sigma^y = i sigma^z.
    EXPECT_FALSE(commutes(e.sigma_x, e.sigma_z));
    EXPECT_EQ(e.sigma_x * e.sigma_y, e.sigma_z.with_phase(Phase::kI));
    EXPECT_EQ(d.sigma_x * d.sigma_y, d.sigma_z.with_phase(Phase::kI));
  }
}

TEST(Duality, RejectsNonSymmetricOperators) {
  const DualityContext ctx(6);
  OperatorSum<double> x1(PauliString::parse(6, "Z1"), 1.0);
  EXPECT_THROW(dualize(x1, ctx, true), DomainError);
  EXPECT_NO_THROW(dualize(x1, ctx, false));
  EXPECT_THROW(DualityContext(7), DimensionError);
}

TEST(Models, TermCountsAndSymmetries) {
  const auto h = build_zxz(ChainModel::zxz(8, 1, 1, 1, 1));
  EXPECT_EQ(h.size(), 21u);
  const SymmetryOperators g = symmetry_operators(8);
  EXPECT_TRUE(is_symmetric(h, g.g_even));
  EXPECT_TRUE(is_symmetric(h, g.g_odd));
  ChainModel literal = ChainModel::zxz(8, 1, 1, 1, 1);
  literal.options.literal_ranges = true;
  EXPECT_EQ(build_zxz(literal).size(), 18u);
  EXPECT_THROW(build_zxz(ChainModel::zxz(7, 1, 1, 1, 1)), ModelError);
  ChainModel bad = ChainModel::ising(8, 1, 1, 0);
  bad.couplings["lambda1"] = 1.0;
  EXPECT_THROW(bad.validate(), ModelError);
  EXPECT_EQ(build_ising(ChainModel::ising(8, 1, 0.5, 0.1)).size(), 7u + 7u + 6u);
}

TEST(Models, ZxzMatchesKroneckerOracle) {
  const int L = 6;
  const double l1 = 0.9, l2 = 1.3, g = 0.21, g2 = 0.17;
  Eigen::MatrixXcd ref = Eigen::MatrixXcd::Zero(64, 64);
  for (int j = 1; j <= 2; ++j) {
    ref += l1 * oracle::site_op(L, 2 * j - 1, 'Z') * oracle::site_op(L, 2 * j, 'X') *
           oracle::site_op(L, 2 * j + 1, 'Z');
    ref += l2 * oracle::site_op(L, 2 * j, 'Z') * oracle::site_op(L, 2 * j + 1, 'X') *
           oracle::site_op(L, 2 * j + 2, 'Z');
  }
  for (int j = 1; j <= L; ++j) ref += g * oracle::site_op(L, j, 'X');
  for (int j = 1; j < L; ++j) ref += g2 * oracle::site_op(L, j, 'X') * oracle::site_op(L, j + 1, 'X');
  EXPECT_LT(max_diff(to_dense(build_zxz(ChainModel::zxz(L, l1, l2, g, g2))), ref), 1e-13);
}

TEST(Models, SwapSymmetryAtEqualCouplings) {
  // Reflection i -> L + 1 - i maps the chain onto itself when lambda1 = lambda2.
  const int L = 8;
  const auto h = build_zxz(ChainModel::zxz(L, 1.0, 1.0, 0.3, 0.2));
  OperatorSum<double> reflected(L);
  for (const auto& [k, c] : h) {
    PauliKey r{0, 0};
    for (int i = 1; i <= L; ++i) {
      if (k.x & site_bit(i)) r.x |= site_bit(L + 1 - i);
      if (k.z & site_bit(i)) r.z |= site_bit(L + 1 - i);
    }
    reflected.add(r, c);
  }
  EXPECT_EQ(reflected, h);
  const auto h2 = build_zxz(ChainModel::zxz(L, 1.0, 1.2, 0.3, 0.2));
  EXPECT_FALSE(h2 == h);
}

TEST(Dense, SizeLimit) {
  EXPECT_THROW(to_dense(OperatorSum<Complex>(PauliString(16))), SizeError);
}
