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

#include <cstdlib>
#include <filesystem>

#include <gtest/gtest.h>

#include "edgequbit/edgequbit.hpp"

using namespace edgequbit;

namespace {

Json zxz_json() {
  return Json::parse(R"({"family": "ZXZ", "L": 14, "couplings": {"lambda1": 1.0, "lambda2": 0.6, "gamma": 0.05, "gamma2": 0.05}})");
}

std::string validation_message(const Json& j) {
  try {
    config_from_json(j);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(ModelJson, RoundTripAndCanonicalForm) {
  const ChainModel m = model_from_json(zxz_json());
  EXPECT_EQ(m, ChainModel::zxz(14, 1.0, 0.6, 0.05, 0.05));
  EXPECT_EQ(model_to_json(m), zxz_json());
  ChainModel i = ChainModel::ising(9, 1.0, 0.25, 0.25);
  i.options.field_on_last_site = true;
  EXPECT_EQ(model_from_json(model_to_json(i)), i);
}

TEST(ModelJson, ErrorsNameTheKey) {
  Json j = zxz_json();
  j["couplings"]["lambda3"] = 1.0;
  EXPECT_NE(validation_message({{"model", j}}).find("model.couplings.lambda3"), std::string::npos);
  j = zxz_json();
  j["couplings"].erase("gamma2");
  EXPECT_NE(validation_message({{"model", j}}).find("model.couplings.gamma2"), std::string::npos);
  j = zxz_json();
  j["colour"] = "red";
  EXPECT_NE(validation_message({{"model", j}}).find("model.colour"), std::string::npos);
  j = zxz_json();
  j["L"] = 7;
  EXPECT_NE(validation_message({{"model", j}}).find("even L"), std::string::npos);
  j = zxz_json();
  j["family"] = "HEISENBERG";
  EXPECT_NE(validation_message({{"model", j}}).find("model.family"), std::string::npos);
  j = zxz_json();
  j["couplings"]["gamma"] = "small";
  EXPECT_NE(validation_message({{"model", j}}).find("model.couplings.gamma"), std::string::npos);
}

TEST(ConfigJson, DefaultsAndValidation) {
  const Config c = config_from_json({{"model", zxz_json()}});
  EXPECT_EQ(c.run.grid.points, 400);
  EXPECT_DOUBLE_EQ(c.run.threshold, std::exp(-1.0));
  EXPECT_EQ(config_from_json(config_to_json(c)).model, c.model);
  EXPECT_EQ(config_to_json(config_from_json(config_to_json(c))), config_to_json(c));
  EXPECT_NE(validation_message({{"model", zxz_json()}, {"run", {{"threshold", 2.0}}}}).find("run.threshold"),
            std::string::npos);
  EXPECT_NE(validation_message({{"model", zxz_json()}, {"run", {{"tmax", 2.0}}}}).find("run.tmax"),
            std::string::npos);
  EXPECT_NE(validation_message({{"model", zxz_json()}, {"sweep", {{"axis", "J"}, {"grid", {1}}}}}).find("sweep.axis"),
            std::string::npos);
  EXPECT_NE(validation_message({{"model", zxz_json()}, {"szm", {{"order", 9}}}}).find("szm.order"),
            std::string::npos);
  EXPECT_NE(validation_message({{"run", Json::object()}}).find("config.model"), std::string::npos);
}

TEST(Observables, Resolution) {
  const ChainModel z = ChainModel::zxz(8, 1, 0.6, 0.1, 0.1);
  EXPECT_EQ(resolve_observable("SigmaX", z), PauliString::parse(8, "X1 Z2"));
  EXPECT_EQ(resolve_observable("bulk", z), PauliString::parse(8, "Z4"));
  EXPECT_EQ(resolve_observable("X3 Z4", z), PauliString::parse(8, "X3 Z4"));
  EXPECT_EQ(resolve_observable("SigmaX", ChainModel::ising(7, 1, 0.2, 0.2)), PauliString::parse(7, "X1"));
  EXPECT_THROW(resolve_observable("Q9", z), ValidationError);
  EXPECT_EQ(observable_slug("X3 Z4"), "X3_Z4");
}

class SweepTest : public ::testing::Test {
 protected:
  SweepPlan plan() const {
    SweepPlan p;
    p.base = ChainModel::zxz(8, 1.0, 1.0, 0.05, 0.05);
    p.axis = {"lambda1", {0.5, 0.6, 1.0, 1.5}};
    p.run.observables = {"SigmaZ", "SigmaX", "bulk"};
    p.run.grid = {0.1, 1e4, 120};
    return p;
  }
};

TEST_F(SweepTest, DeterministicAcrossWorkerCounts) {
  const SweepPlan p = plan();
  const SweepResult a = run_sweep(p, 1);
  const SweepResult b = run_sweep(p, 4);
  EXPECT_EQ(sweep_summary_csv(p, a), sweep_summary_csv(p, b));
  EXPECT_EQ(a.config_hash, b.config_hash);
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].index, i);
    EXPECT_DOUBLE_EQ(a.records[i].value, p.axis.grid[i]);
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_EQ(a.records[i].observables[k].series.values, b.records[i].observables[k].series.values);
    }
  }
}

TEST_F(SweepTest, PoisonedPointIsIsolated) {
  SweepPlan p = plan();
  p.axis = {"L", {6, 7, 8}};
  const SweepResult r = run_sweep(p, 2);
  ASSERT_EQ(r.records.size(), 3u);
  EXPECT_FALSE(r.records[0].error.has_value());
  ASSERT_TRUE(r.records[1].error.has_value());
  EXPECT_NE(r.records[1].error->find("even L"), std::string::npos);
  EXPECT_FALSE(r.records[2].error.has_value());
  EXPECT_EQ(r.records[2].observables.size(), 3u);
}

TEST_F(SweepTest, MemoryCapRefusesPlan) {
  ::setenv(kMemoryCapEnv, "1e-6", 1);
  EXPECT_THROW(run_sweep(plan(), 1), SizeError);
  ::setenv(kMemoryCapEnv, "lots", 1);
  EXPECT_THROW(run_sweep(plan(), 1), ValidationError);
  ::unsetenv(kMemoryCapEnv);
  EXPECT_NO_THROW(memory_cap_bytes());
}

TEST_F(SweepTest, OutputsAndOverwriteGuard) {
  const SweepPlan p = plan();
  const SweepResult r = run_sweep(p, 1);
  const auto dir = std::filesystem::temp_directory_path() / "edgequbit_sweep_test";
  std::filesystem::remove_all(dir);
  write_sweep_outputs(p, r, dir, false, true);
  EXPECT_TRUE(std::filesystem::exists(dir / "summary.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "provenance.json"));
  EXPECT_TRUE(std::filesystem::exists(dir / "series" / "point_0002" / "SigmaX.csv"));
  EXPECT_THROW(write_sweep_outputs(p, r, dir, false, false), ValidationError);
  EXPECT_NO_THROW(write_sweep_outputs(p, r, dir, true, false));
  const Json prov = read_json_file(dir / "provenance.json");
  EXPECT_EQ(prov["config_hash"], r.config_hash);
  std::filesystem::remove_all(dir);
}

TEST(Csv, FullPrecision) {
  AutocorrSeries s;
  s.times = {0.1, 1.0 / 3.0};
  s.values = {1.0, 2.0 / 3.0};
  const std::string csv = series_to_csv(s);
  EXPECT_EQ(csv.substr(0, 4), "t,C\n");
  EXPECT_NE(csv.find("0.33333333333333331,0.66666666666666663"), std::string::npos);
}
