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

#include <cmath>
#include <functional>

#include <gtest/gtest.h>

#include "edgequbit/analysis.hpp"

using namespace edgequbit;

namespace {

AutocorrSeries synthetic(const std::vector<double>& times, const std::function<double(double)>& f) {
  AutocorrSeries s;
  s.times = times;
  s.c0 = f(0.0);
  for (double t : times) s.values.push_back(f(t));
  return s;
}

}  // namespace

TEST(DecayTime, ExponentialWithinTwoPercent) {
  for (double tau : {0.7, 3.0, 42.0, 1500.0}) {
    const auto s = synthetic(log_time_grid(), [tau](double t) { return std::exp(-t / tau); });
    const DecayEstimate d = extract_decay_time(s);
    EXPECT_FALSE(d.censored);
    EXPECT_NEAR(d.T / tau, 1.0, 0.02) << tau;
  }
}

TEST(DecayTime, ConstantIsCensored) {
  const auto s = synthetic(log_time_grid(), [](double) { return 0.9; });
  const DecayEstimate d = extract_decay_time(s);
  EXPECT_TRUE(d.censored);
  EXPECT_DOUBLE_EQ(d.T, 1e5);
}

TEST(DecayTime, EnvelopeIgnoresOscillationZeros) {
  // cos(2t) crosses zero at t = 0.785 long before the envelope decays.
  const double tau = 20.0;
  const auto s = synthetic(log_time_grid(), [tau](double t) { return std::cos(2 * t) * std::exp(-t / tau); });
  EXPECT_NEAR(extract_decay_time(s).T / tau, 1.0, 0.15);
  EXPECT_LT(extract_decay_time(s, std::exp(-1.0), DecayKind::kT2Star, 5, 1.0).T, 2.0);
}

TEST(DecayTime, ThresholdMonotone) {
  const auto s = synthetic(log_time_grid(), [](double t) { return 0.6 * std::exp(-t / 5000.0) + 0.4 * std::exp(-t / 2.0); });
  double prev = 0.0;
  for (double th : {0.9, 0.7, 0.5, 0.3, 0.1, 0.01}) {
    const double T = extract_decay_time(s, th).T;
    EXPECT_GE(T, prev) << th;
    prev = T;
  }
}

TEST(DecayTime, ScaleEquivariance) {
  // C(t) -> C(t / a) on a grid scaled by a gives T -> a T.
  const auto f = [](double t) { return 0.5 * std::exp(-t / 3.0) + 0.5 * std::exp(-t / 300.0); };
  const auto base = synthetic(log_time_grid(), f);
  for (double a : {0.01, 2.0, 37.0}) {
    std::vector<double> times;
    for (double t : base.times) times.push_back(a * t);
    const auto scaled = synthetic(times, [&](double t) { return f(t / a); });
    EXPECT_NEAR(extract_decay_time(scaled).T, a * extract_decay_time(base).T, 1e-9 * a * 300);
  }
}

TEST(DecayTime, RejectsBadInput) {
  AutocorrSeries empty;
  EXPECT_THROW(extract_decay_time(empty), DomainError);
  auto s = synthetic(log_time_grid(1, 10, 5), [](double t) { return std::exp(-t); });
  EXPECT_THROW(extract_decay_time(s, 1.5), DomainError);
  s.c0 = 0.0;
  EXPECT_THROW(extract_decay_time(s), DomainError);
}

TEST(Plateau, TwoStepSignal) {
  const auto s = synthetic(log_time_grid(), [](double t) { return 0.4 * std::exp(-t) + 0.6 * std::exp(-t / 1e6); });
  EXPECT_NEAR(detect_plateau(s, 10.0, 100.0), 0.6, 1e-3);
  EXPECT_THROW(detect_plateau(s, 2e5, 3e5), DomainError);
}

TEST(ScalingFit, RecoversExactLaw) {
  // T = A (J/Gamma)^(c J/J2).
  const double c = 0.8, A = 3.0, jg = 4.0;
  std::vector<ScalingPoint> pts;
  for (double x : {2.0, 3.0, 4.0, 5.0}) pts.push_back({x, A * std::pow(jg, c * x), false});
  const ScalingFit f = fit_prethermal_scaling(pts, jg);
  EXPECT_NEAR(f.c.value(), c, 1e-12);
  EXPECT_NEAR(f.prefactor, A, 1e-10);
  EXPECT_NEAR(f.r2, 1.0, 1e-12);
  EXPECT_EQ(f.points, 4u);
}

TEST(ScalingFit, Errors) {
  std::vector<ScalingPoint> pts{{2, 10, false}, {3, 100, true}, {4, 1000, false}};
  try {
    fit_prethermal_scaling(pts);
    ADD_FAILURE();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("point 1"), std::string::npos);
  }
  pts.pop_back();
  pts[1].censored = false;
  EXPECT_THROW(fit_prethermal_scaling(pts), DomainError);
  pts.push_back({4, 1000, false});
  EXPECT_THROW(fit_prethermal_scaling(pts, 0.5), DomainError);
}

TEST(DecayTime, IsingEdgeOutlivesBulk) {
  ChainModel m = ChainModel::ising(8, 1.0, 0.25, 0.25);
  m.options.field_on_last_site = true;
  const Spectrum spec = diagonalize(build_hamiltonian(m));
  const auto edge = extract_decay_time(autocorrelator(spec, OperatorSum<Complex>(PauliString::single(8, 1, 'Z'), 1.0)));
  const auto bulk = extract_decay_time(autocorrelator(spec, OperatorSum<Complex>(bulk_reference(8))));
  EXPECT_GT(edge.T, 100 * bulk.T);
}
