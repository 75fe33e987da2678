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

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include "edgequbit/dense.hpp"
#include "edgequbit/duality.hpp"
#include "oracles.hpp"

using namespace edgequbit;

namespace {

double j0_series(double x) {
  using Big = boost::multiprecision::cpp_bin_float_50;
  const Big q = Big(x) * Big(x) / 4;
  Big term = 1, sum = 1;
  for (int k = 1; k < 200; ++k) {
    term *= -q / (Big(k) * Big(k));
    sum += term;
  }
  return static_cast<double>(sum);
}

PauliString random_string(std::mt19937_64& rng, int L) {
  std::uniform_int_distribution<Mask> bits(0, (Mask{1} << L) - 1);
  return PauliString(L, bits(rng), bits(rng));
}

int support_span(const PauliString& p) {
  const Mask m = p.x_mask() | p.z_mask();
  if (m == 0) return 0;
  return 64 - std::countl_zero(m) - std::countr_zero(m);
}

}  // namespace

TEST(Bessel, MatchesSeriesOracle) {
  for (int i = 0; i <= 2000; ++i) {
    const double x = 0.01 * i;
    EXPECT_NEAR(bessel_j0(x), j0_series(x), 1e-10) << x;
  }
  EXPECT_EQ(bessel_j0(-3.3), bessel_j0(3.3));
  EXPECT_NEAR(bessel_j0(2.404825557695773), 0.0, 1e-14);
}

TEST(Floquet, Coefficients) {
  const auto z = floquet_coefficients(0.0, 0.0);
  EXPECT_DOUBLE_EQ(z.a, 1.0);
  EXPECT_DOUBLE_EQ(z.b, 0.0);
  EXPECT_DOUBLE_EQ(z.c_edge, 1.0);
  const auto f = floquet_coefficients(2.68, 1.20);
  EXPECT_LT(std::abs(f.c_edge), 0.01);
  EXPECT_NEAR(f.a + f.b, bessel_j0(2.0 * (2.68 - 1.20)), 1e-15);
  for (double lam : {0.0, 0.4, 1.7, 3.1}) {
    EXPECT_NEAR(FloquetCoefficients::c_of(lam) + FloquetCoefficients::d_of(lam), 1.0, 1e-15);
  }
  EXPECT_THROW(floquet_coefficients(std::nan(""), 1.0), DomainError);
}

TEST(Floquet, HamiltonianIsHermitianAndSymmetric) {
  const auto h = build_hamiltonian(ChainModel::floquet(10, 0.6, 1.0, 2.68, 1.20, 0.05));
  EXPECT_TRUE(h.is_hermitian());
  const SymmetryOperators g = symmetry_operators(10);
  EXPECT_TRUE(is_symmetric(h, g.g_even));
  EXPECT_TRUE(is_symmetric(h, g.g_odd));
}

TEST(Pauli, TraceOrthonormality) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const PauliString a = random_string(rng, 4);
    const PauliString b = random_string(rng, 4);
    const Eigen::MatrixXcd ma = to_dense(a), mb = to_dense(b);
    const Complex tr = (ma.adjoint() * mb).trace() / 16.0;
    const bool same = a.x_mask() == b.x_mask() && a.z_mask() == b.z_mask();
    EXPECT_NEAR(std::abs(tr), same ? 1.0 : 0.0, 1e-12);
  }
}

class DualityProperties : public ::testing::TestWithParam<int> {};

TEST_P(DualityProperties, HamiltonianMapsTermwise) {
  const int L = GetParam();
  const DualityContext ctx(L);
  std::mt19937_64 rng(L);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 5; ++i) {
    const double c[4] = {u(rng), u(rng), u(rng), u(rng)};
    EXPECT_EQ(dualize(build_zxz(ChainModel::zxz(L, c[0], c[1], c[2], c[3])), ctx),
              build_dual_ising(ChainModel::dual_ising(L, c[0], c[1], c[2], c[3])));
  }
}

TEST_P(DualityProperties, InvolutionAndHomomorphism) {
  const int L = GetParam();
  const DualityContext ctx(L);
  std::mt19937_64 rng(100 + L);
  for (int i = 0; i < 500; ++i) {
    const PauliString a = random_string(rng, L);
    const PauliString b = random_string(rng, L);
    EXPECT_EQ(dualize(dualize(a, ctx), ctx), a);
    EXPECT_EQ(dualize(a * b, ctx), dualize(a, ctx) * dualize(b, ctx));
    EXPECT_EQ(commutes(a, b), commutes(dualize(a, ctx), dualize(b, ctx)));
  }
}

TEST_P(DualityProperties, IsometryOnSums) {
  const int L = GetParam();
  const DualityContext ctx(L);
  std::mt19937_64 rng(200 + L);
  std::normal_distribution<double> n;
  OperatorSum<double> a(L), b(L);
  for (int i = 0; i < 30; ++i) {
    a += OperatorSum<double>(random_string(rng, L), n(rng));
    b += OperatorSum<double>(random_string(rng, L), n(rng));
  }
  b += 0.5 * a;
  EXPECT_NEAR(trace_inner_product(dualize(a, ctx), dualize(b, ctx)), trace_inner_product(a, b), 1e-12);
  EXPECT_NEAR(norm_squared(dualize(a, ctx)), norm_squared(a), 1e-12);
}

TEST_P(DualityProperties, SymmetricLocalStringsStayLocal) {
  const int L = GetParam();
  const DualityContext ctx(L);
  const SymmetryOperators g = symmetry_operators(L);
  std::mt19937_64 rng(300 + L);
  int checked = 0;
  while (checked < 200) {
    // A random string on three consecutive sites.
    std::uniform_int_distribution<int> start(1, L - 2);
    std::uniform_int_distribution<Mask> bits(0, 7);
    const int s = start(rng);
    const PauliString p(L, bits(rng) << (s - 1), bits(rng) << (s - 1));
    if (!commutes(p, g.g_even) || !commutes(p, g.g_odd)) continue;
    EXPECT_LE(support_span(dualize(p, ctx)), 5) << p.to_string();
    ++checked;
  }
}

INSTANTIATE_TEST_SUITE_P(Lengths, DualityProperties, ::testing::Values(6, 8, 10, 12));
