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

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "edgequbit/analysis.hpp"
#include "edgequbit/exact_dynamics.hpp"
#include "edgequbit/json_io.hpp"
#include "edgequbit/models.hpp"

extern "C" void openblas_set_num_threads(int num_threads);

namespace edgequbit {

inline constexpr const char* kLibraryVersion = "0.1.0";

/// Environment variable holding the per-sweep memory cap in GiB.
inline constexpr const char* kMemoryCapEnv = "EDGEQUBIT_MEMORY_CAP_GIB";
inline constexpr double kDefaultMemoryCapGiB = 8.0;

struct SweepPlan {
  ChainModel base;
  SweepAxis axis;
  RunConfig run;

  static SweepPlan from_config(const Config& c) {
    if (!c.sweep) throw ValidationError("sweep: block missing from the plan");
    return {c.model, *c.sweep, c.run};
  }

  /// Model at grid point i.
  ChainModel model_at(std::size_t i) const {
    ChainModel m = base;
    const double v = axis.grid.at(i);
    if (axis.axis == "L") {
      m.L = static_cast<int>(v);
    } else {
      m.couplings[axis.axis] = v;
    }
    return m;
  }
};

struct ObservableResult {
  std::string label;
  DecayEstimate decay;
  double dc_weight = 0.0;
  std::optional<double> window_plateau;
  AutocorrSeries series;
};

struct PointRecord {
  std::size_t index = 0;
  double value = 0.0;
  ChainModel model;
  std::vector<ObservableResult> observables;
  std::optional<std::string> error;
};

struct SweepResult {
  std::string config_hash;
  Json plan;
  std::vector<PointRecord> records;
};

/// 64-bit FNV-1a, printed as 16 hex digits.
inline std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline double memory_cap_bytes() {
  double gib = kDefaultMemoryCapGiB;
  if (const char* env = std::getenv(kMemoryCapEnv)) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      throw ValidationError(std::string(kMemoryCapEnv) + ": expected a positive number of GiB, got \"" +
                            env + "\"");
    }
    gib = v;
  }
  return gib * 1024.0 * 1024.0 * 1024.0;
}

/// Peak bytes of one diagonalization: the complex block as assembled plus
/// the real eigenvector matrix and LAPACK workspace for the largest sector.
inline double estimate_point_bytes(const ChainModel& m) {
  const OperatorSum<double> h = build_hamiltonian(m);
  const int k = static_cast<int>(find_x_symmetries(h).size());
  const double d = std::ldexp(1.0, m.L - k);
  return 16.0 * d * d + 2.0 * 8.0 * d * d;
}

/// Builds, diagonalizes and analyses one model.
inline std::vector<ObservableResult> analyse_model(const ChainModel& m, const RunConfig& run) {
  std::vector<PauliString> ops;
  for (const auto& label : run.observables) ops.push_back(resolve_observable(label, m));
  DiagonalizeOptions dopts;
  dopts.max_L = run.max_L;
  const Spectrum spec = diagonalize(build_hamiltonian(m), dopts);
  const std::vector<double> times = run.grid.times();
  std::vector<ObservableResult> out;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    ObservableResult r;
    r.label = run.observables[i];
    r.series = autocorrelator(spec, OperatorSum<Complex>(ops[i]), times, run.autocorr);
    r.series.label = r.label;
    r.series.model = model_to_json(m).dump();
    const bool edge_x = r.label == "SigmaX" || r.label == "SigmaY";
    r.decay = extract_decay_time(r.series, run.threshold, edge_x ? DecayKind::kT2Star : DecayKind::kT1);
    r.dc_weight = r.series.plateau;
    if (run.plateau_window) {
      r.window_plateau = detect_plateau(r.series, run.plateau_window->first, run.plateau_window->second);
    }
    out.push_back(std::move(r));
  }
  return out;
}

/// Runs every grid point as an independent job. Records come back in grid
/// order whatever the worker count; a failing point stores its message.
inline SweepResult run_sweep(const SweepPlan& plan, int workers) {
  if (workers < 1) throw ValidationError("workers: must be positive");
  if (plan.axis.grid.empty()) throw ValidationError("sweep.grid: empty");
  Config canonical;
  canonical.model = plan.base;
  canonical.run = plan.run;
  canonical.sweep = plan.axis;
  Json pj = config_to_json(canonical);
  pj.erase("output");
  SweepResult result;
  result.plan = pj;
  result.config_hash = fnv1a_hex(pj.dump());
  result.records.resize(plan.axis.grid.size());

  const double cap = memory_cap_bytes();
  double worst = 0.0;
  for (std::size_t i = 0; i < plan.axis.grid.size(); ++i) {
    result.records[i].index = i;
    result.records[i].value = plan.axis.grid[i];
    result.records[i].model = plan.model_at(i);
    try {
      result.records[i].model.validate();
      if (result.records[i].model.L <= plan.run.max_L) {
        worst = std::max(worst, estimate_point_bytes(result.records[i].model));
      }
    } catch (const Error&) {
      // Reported per point below.
    }
  }
  const int active = std::min<int>(workers, static_cast<int>(plan.axis.grid.size()));
  if (worst * active > cap) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "memory budget exceeded: %d worker(s) x %.3g GiB per point > cap %.3g GiB (set %s)",
                  active, worst / 1073741824.0, cap / 1073741824.0, kMemoryCapEnv);
    throw SizeError(buf);
  }

  // One BLAS thread per job keeps each point bit-reproducible.
  openblas_set_num_threads(1);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < result.records.size(); i = next++) {
      PointRecord& rec = result.records[i];
      try {
        rec.model.validate();
        rec.observables = analyse_model(rec.model, plan.run);
      } catch (const std::exception& e) {
        rec.observables.clear();
        rec.error = e.what();
      }
    }
  };
  if (active == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < active; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return result;
}

namespace detail {

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

inline void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write " + p.string());
  out << text;
}

}  // namespace detail

/// Summary CSV, one row per grid point. Contains no timestamps.
inline std::string sweep_summary_csv(const SweepPlan& plan, const SweepResult& r) {
  std::string out = "index,axis,value,L";
  for (const auto& c : coupling_names(plan.base.family)) out += "," + c;
  for (const auto& label : plan.run.observables) {
    const std::string s = observable_slug(label);
    out += ",T_" + s + ",censored_" + s + ",dc_" + s;
    if (plan.run.plateau_window) out += ",plateau_" + s;
  }
  out += ",error\n";
  for (const auto& rec : r.records) {
    out += std::to_string(rec.index) + "," + plan.axis.axis + "," + format_full(rec.value) + "," +
           std::to_string(rec.model.L);
    for (const auto& c : coupling_names(plan.base.family)) {
      auto it = rec.model.couplings.find(c);
      out += "," + (it == rec.model.couplings.end() ? std::string() : format_full(it->second));
    }
    for (std::size_t k = 0; k < plan.run.observables.size(); ++k) {
      if (rec.error) {
        out += plan.run.plateau_window ? ",,,," : ",,,";
        continue;
      }
      const ObservableResult& o = rec.observables[k];
      out += "," + format_full(o.decay.T) + "," + (o.decay.censored ? "1" : "0") + "," +
             format_full(o.dc_weight);
      if (plan.run.plateau_window) out += "," + format_full(o.window_plateau.value_or(0.0));
    }
    out += "," + detail::csv_quote(rec.error.value_or("")) + "\n";
  }
  return out;
}

/// Writes summary.csv, provenance.json and (optionally) per-point series
/// under `dir`. Existing files are replaced only with `force`.
inline void write_sweep_outputs(const SweepPlan& plan, const SweepResult& r,
                                const std::filesystem::path& dir, bool force, bool series) {
  namespace fs = std::filesystem;
  const fs::path summary = dir / "summary.csv";
  if (fs::exists(summary) && !force) {
    throw ValidationError(summary.string() + " exists; pass --force to overwrite");
  }
  fs::create_directories(dir);
  detail::write_text(summary, sweep_summary_csv(plan, r));
  Json prov;
  prov["config_hash"] = r.config_hash;
  prov["library_version"] = kLibraryVersion;
  prov["plan"] = r.plan;
  prov["points"] = r.records.size();
  std::size_t failed = 0;
  for (const auto& rec : r.records) failed += rec.error ? 1 : 0;
  prov["failed_points"] = failed;
  detail::write_text(dir / "provenance.json", prov.dump(2) + "\n");
  if (!series) return;
  for (const auto& rec : r.records) {
    if (rec.error) continue;
    char name[32];
    std::snprintf(name, sizeof name, "point_%04zu", rec.index);
    const fs::path pdir = dir / "series" / name;
    fs::create_directories(pdir);
    for (const auto& o : rec.observables) {
      const std::string slug = observable_slug(o.label);
      detail::write_text(pdir / (slug + ".csv"), series_to_csv(o.series));
      Json side;
      side["model"] = model_to_json(rec.model);
      side["operator"] = o.label;
      side["time_grid"] = {{"t_min", plan.run.grid.t_min},
                           {"t_max", plan.run.grid.t_max},
                           {"points", plan.run.grid.points}};
      side["c0"] = o.series.c0;
      side["dc_weight"] = o.dc_weight;
      side["decay"] = decay_to_json(o.decay);
      detail::write_text(pdir / (slug + ".json"), side.dump(2) + "\n");
    }
  }
}

}  // namespace edgequbit
