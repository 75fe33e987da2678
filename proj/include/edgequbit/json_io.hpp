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

#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "edgequbit/analysis.hpp"
#include "edgequbit/errors.hpp"
#include "edgequbit/exact_dynamics.hpp"
#include "edgequbit/models.hpp"
#include "edgequbit/szm.hpp"

namespace edgequbit {

using Json = nlohmann::ordered_json;

namespace detail {

inline void check_keys(const Json& obj, std::initializer_list<const char*> allowed,
                       const std::string& path) {
  if (!obj.is_object()) throw ValidationError(path + ": expected an object");
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || item.key() == a;
    if (!ok) throw ValidationError(path + "." + item.key() + ": unknown key");
  }
}

inline double number_at(const Json& obj, const char* key, const std::string& path) {
  const Json& v = obj.at(key);
  if (!v.is_number()) throw ValidationError(path + "." + key + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ValidationError(path + "." + key + ": not finite");
  return d;
}

inline int integer_at(const Json& obj, const char* key, const std::string& path) {
  const Json& v = obj.at(key);
  if (!v.is_number_integer()) throw ValidationError(path + "." + key + ": expected an integer");
  return v.get<int>();
}

inline bool bool_at(const Json& obj, const char* key, const std::string& path) {
  const Json& v = obj.at(key);
  if (!v.is_boolean()) throw ValidationError(path + "." + key + ": expected true or false");
  return v.get<bool>();
}

inline std::string string_at(const Json& obj, const char* key, const std::string& path) {
  const Json& v = obj.at(key);
  if (!v.is_string()) throw ValidationError(path + "." + key + ": expected a string");
  return v.get<std::string>();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Models

inline Json model_to_json(const ChainModel& m) {
  Json j;
  j["family"] = family_name(m.family);
  j["L"] = m.L;
  Json c = Json::object();
  for (const auto& name : coupling_names(m.family)) {
    auto it = m.couplings.find(name);
    if (it != m.couplings.end()) c[name] = it->second;
  }
  j["couplings"] = c;
  const ModelOptions defaults;
  if (!(m.options == defaults)) {
    j["options"] = {{"literal_ranges", m.options.literal_ranges},
                    {"field_on_last_site", m.options.field_on_last_site}};
  }
  return j;
}

inline ChainModel model_from_json(const Json& j, const std::string& path = "model") {
  detail::check_keys(j, {"family", "L", "couplings", "options"}, path);
  for (const char* k : {"family", "L", "couplings"}) {
    if (!j.contains(k)) throw ValidationError(path + "." + k + ": required key missing");
  }
  ChainModel m;
  try {
    m.family = family_from_name(detail::string_at(j, "family", path));
  } catch (const ModelError& e) {
    throw ValidationError(path + ".family: " + e.what());
  }
  m.L = detail::integer_at(j, "L", path);
  const Json& c = j.at("couplings");
  if (!c.is_object()) throw ValidationError(path + ".couplings: expected an object");
  const auto& names = coupling_names(m.family);
  for (const auto& item : c.items()) {
    if (std::find(names.begin(), names.end(), item.key()) == names.end()) {
      throw ValidationError(path + ".couplings." + item.key() + ": not a coupling of " +
                            family_name(m.family));
    }
    m.couplings[item.key()] = detail::number_at(c, item.key().c_str(), path + ".couplings");
  }
  for (const auto& name : names) {
    if (!m.couplings.count(name)) {
      throw ValidationError(path + ".couplings." + name + ": required key missing");
    }
  }
  if (j.contains("options")) {
    const Json& o = j.at("options");
    const std::string op = path + ".options";
    detail::check_keys(o, {"literal_ranges", "field_on_last_site"}, op);
    if (o.contains("literal_ranges")) m.options.literal_ranges = detail::bool_at(o, "literal_ranges", op);
    if (o.contains("field_on_last_site")) {
      m.options.field_on_last_site = detail::bool_at(o, "field_on_last_site", op);
    }
  }
  try {
    m.validate();
  } catch (const ModelError& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return m;
}

// ---------------------------------------------------------------------------
// Observables

/// Resolves an observable label for a model: SigmaX, SigmaY, SigmaZ (edge
/// operators in the model's own frame), bulk (Z at the middle site), or a
/// Pauli string such as "X3 Z4".
inline PauliString resolve_observable(const std::string& label, const ChainModel& m) {
  const int L = m.L;
  if (label == "SigmaX" || label == "SigmaY" || label == "SigmaZ") {
    const EdgeOperators e =
        m.family == Family::kIsing
            ? EdgeOperators{PauliString::single(L, 1, 'X'), PauliString::single(L, 1, 'Y'),
                            PauliString::single(L, 1, 'Z')}
        : m.family == Family::kDualIsing ? dual_edge_operators(L)
                                         : edge_operators(L);
    return label == "SigmaX" ? e.sigma_x : label == "SigmaY" ? e.sigma_y : e.sigma_z;
  }
  if (label == "bulk") return bulk_reference(L);
  try {
    return PauliString::parse(L, label);
  } catch (const Error& e) {
    throw ValidationError("observable \"" + label + "\": " + e.what());
  }
}

/// File-name-safe form of an observable label ("X3 Z4" -> "X3_Z4").
inline std::string observable_slug(const std::string& label) {
  std::string s;
  for (char c : label) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      s += c;
    } else if (!s.empty() && s.back() != '_') {
      s += '_';
    }
  }
  while (!s.empty() && s.back() == '_') s.pop_back();
  return s.empty() ? "op" : s;
}

// ---------------------------------------------------------------------------
// Run configuration

struct TimeGridConfig {
  double t_min = 1e-1;
  double t_max = 1e5;
  int points = 400;

  std::vector<double> times() const { return log_time_grid(t_min, t_max, points); }
};

struct RunConfig {
  TimeGridConfig grid;
  double threshold = std::exp(-1.0);
  AutocorrOptions autocorr;
  std::vector<std::string> observables{"SigmaZ", "SigmaX", "bulk"};
  std::optional<std::pair<double, double>> plateau_window;
  int max_L = 14;
};

struct OutputConfig {
  std::string dir = "out";
  bool series = true;
};

struct SZMConfig {
  std::vector<Seed> seeds{Seed::kSigmaZ, Seed::kSigmaX};
  int order = 2;
  bool exact = false;
  bool throw_on_pole = false;
};

/// A one-dimensional scan: `axis` is a coupling name or "L".
struct SweepAxis {
  std::string axis;
  std::vector<double> grid;
};

struct Config {
  ChainModel model;
  RunConfig run;
  OutputConfig output;
  std::optional<SZMConfig> szm;
  std::optional<SweepAxis> sweep;
};

inline RunConfig run_from_json(const Json& j, const std::string& path = "run") {
  detail::check_keys(j, {"time_grid", "threshold", "bin_width", "phase_tolerance", "exact",
                         "observables", "plateau_window", "max_L"},
                     path);
  RunConfig r;
  if (j.contains("time_grid")) {
    const Json& g = j.at("time_grid");
    const std::string gp = path + ".time_grid";
    detail::check_keys(g, {"t_min", "t_max", "points"}, gp);
    if (g.contains("t_min")) r.grid.t_min = detail::number_at(g, "t_min", gp);
    if (g.contains("t_max")) r.grid.t_max = detail::number_at(g, "t_max", gp);
    if (g.contains("points")) r.grid.points = detail::integer_at(g, "points", gp);
    if (!(r.grid.t_min > 0.0 && r.grid.t_max > r.grid.t_min)) {
      throw ValidationError(gp + ": need 0 < t_min < t_max");
    }
    if (r.grid.points < 2 || r.grid.points > 100000) {
      throw ValidationError(gp + ".points: must be in [2, 100000]");
    }
  }
  if (j.contains("threshold")) {
    r.threshold = detail::number_at(j, "threshold", path);
    if (!(r.threshold > 0.0 && r.threshold < 1.0)) {
      throw ValidationError(path + ".threshold: must lie in (0, 1)");
    }
  }
  if (j.contains("bin_width")) {
    r.autocorr.bin_width = detail::number_at(j, "bin_width", path);
    if (!(r.autocorr.bin_width > 0.0)) throw ValidationError(path + ".bin_width: must be positive");
  }
  if (j.contains("phase_tolerance")) {
    r.autocorr.phase_tolerance = detail::number_at(j, "phase_tolerance", path);
    if (!(r.autocorr.phase_tolerance > 0.0)) {
      throw ValidationError(path + ".phase_tolerance: must be positive");
    }
  }
  if (j.contains("exact")) r.autocorr.exact = detail::bool_at(j, "exact", path);
  if (j.contains("observables")) {
    const Json& o = j.at("observables");
    if (!o.is_array() || o.empty()) {
      throw ValidationError(path + ".observables: expected a nonempty array of labels");
    }
    r.observables.clear();
    for (const auto& v : o) {
      if (!v.is_string()) throw ValidationError(path + ".observables: labels must be strings");
      r.observables.push_back(v.get<std::string>());
    }
  }
  if (j.contains("plateau_window")) {
    const Json& w = j.at("plateau_window");
    if (!w.is_array() || w.size() != 2 || !w[0].is_number() || !w[1].is_number()) {
      throw ValidationError(path + ".plateau_window: expected [t_a, t_b]");
    }
    const double a = w[0].get<double>(), b = w[1].get<double>();
    if (!(a > 0.0 && b > a)) throw ValidationError(path + ".plateau_window: need 0 < t_a < t_b");
    r.plateau_window = std::pair{a, b};
  }
  if (j.contains("max_L")) r.max_L = detail::integer_at(j, "max_L", path);
  return r;
}

inline Json run_to_json(const RunConfig& r) {
  Json j;
  j["time_grid"] = {{"t_min", r.grid.t_min}, {"t_max", r.grid.t_max}, {"points", r.grid.points}};
  j["threshold"] = r.threshold;
  j["bin_width"] = r.autocorr.bin_width;
  j["phase_tolerance"] = r.autocorr.phase_tolerance;
  j["exact"] = r.autocorr.exact;
  j["observables"] = r.observables;
  if (r.plateau_window) j["plateau_window"] = {r.plateau_window->first, r.plateau_window->second};
  j["max_L"] = r.max_L;
  return j;
}

inline Config config_from_json(const Json& j) {
  detail::check_keys(j, {"model", "run", "output", "szm", "sweep"}, "config");
  if (!j.contains("model")) throw ValidationError("config.model: required key missing");
  Config c;
  c.model = model_from_json(j.at("model"), "model");
  if (j.contains("run")) c.run = run_from_json(j.at("run"));
  if (j.contains("output")) {
    const Json& o = j.at("output");
    detail::check_keys(o, {"dir", "series"}, "output");
    if (o.contains("dir")) c.output.dir = detail::string_at(o, "dir", "output");
    if (o.contains("series")) c.output.series = detail::bool_at(o, "series", "output");
  }
  if (j.contains("szm")) {
    const Json& s = j.at("szm");
    detail::check_keys(s, {"seeds", "order", "exact", "throw_on_pole"}, "szm");
    SZMConfig z;
    if (s.contains("seeds")) {
      const Json& seeds = s.at("seeds");
      if (!seeds.is_array() || seeds.empty()) throw ValidationError("szm.seeds: expected a nonempty array");
      z.seeds.clear();
      for (const auto& v : seeds) {
        if (!v.is_string()) throw ValidationError("szm.seeds: expected strings");
        try {
          z.seeds.push_back(seed_from_name(v.get<std::string>()));
        } catch (const Error& e) {
          throw ValidationError(std::string("szm.seeds: ") + e.what());
        }
      }
    }
    if (s.contains("order")) {
      z.order = detail::integer_at(s, "order", "szm");
      if (z.order < 0 || z.order > kMaxSZMOrder) {
        throw ValidationError("szm.order: must be in [0, " + std::to_string(kMaxSZMOrder) + "]");
      }
    }
    if (s.contains("exact")) z.exact = detail::bool_at(s, "exact", "szm");
    if (s.contains("throw_on_pole")) z.throw_on_pole = detail::bool_at(s, "throw_on_pole", "szm");
    c.szm = z;
  }
  if (j.contains("sweep")) {
    const Json& s = j.at("sweep");
    detail::check_keys(s, {"axis", "grid"}, "sweep");
    if (!s.contains("axis") || !s.contains("grid")) {
      throw ValidationError("sweep: both axis and grid are required");
    }
    SweepAxis a;
    a.axis = detail::string_at(s, "axis", "sweep");
    const auto& names = coupling_names(c.model.family);
    if (a.axis != "L" && std::find(names.begin(), names.end(), a.axis) == names.end()) {
      throw ValidationError("sweep.axis: \"" + a.axis + "\" is neither L nor a coupling of " +
                            family_name(c.model.family));
    }
    const Json& g = s.at("grid");
    if (!g.is_array() || g.empty()) throw ValidationError("sweep.grid: expected a nonempty array");
    for (const auto& v : g) {
      if (!v.is_number() || !std::isfinite(v.get<double>())) {
        throw ValidationError("sweep.grid: expected finite numbers");
      }
      if (a.axis == "L" && !v.is_number_integer()) {
        throw ValidationError("sweep.grid: L values must be integers");
      }
      a.grid.push_back(v.get<double>());
    }
    c.sweep = a;
  }
  return c;
}

/// Canonical form with every default filled in.
inline Json config_to_json(const Config& c) {
  Json j;
  j["model"] = model_to_json(c.model);
  j["run"] = run_to_json(c.run);
  j["output"] = {{"dir", c.output.dir}, {"series", c.output.series}};
  if (c.szm) {
    Json seeds = Json::array();
    for (Seed s : c.szm->seeds) seeds.push_back(seed_name(s));
    j["szm"] = {{"seeds", seeds},
                {"order", c.szm->order},
                {"exact", c.szm->exact},
                {"throw_on_pole", c.szm->throw_on_pole}};
  }
  if (c.sweep) j["sweep"] = {{"axis", c.sweep->axis}, {"grid", c.sweep->grid}};
  return j;
}

inline Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

inline Config load_config(const std::filesystem::path& path) {
  return config_from_json(read_json_file(path));
}

// ---------------------------------------------------------------------------
// Result records

inline Json decay_to_json(const DecayEstimate& d) {
  return {{"kind", decay_kind_name(d.kind)},
          {"T", d.T},
          {"censored", d.censored},
          {"threshold", d.threshold},
          {"smoothing_window", d.smoothing_window}};
}

inline Json pole_to_json(const PoleRecord& p) {
  return {{"ratio", p.ratio()},
          {"order", p.order},
          {"seed", seed_name(p.seed)},
          {"n1", p.n1},
          {"n2", p.n2},
          {"denominator", p.denominator()}};
}

inline Json floquet_to_json(const FloquetCoefficients& f) {
  return {{"lambda1", f.lambda1},
          {"lambda2", f.lambda2},
          {"a", f.a},
          {"b", f.b},
          {"c_edge", f.c_edge},
          {"a_over_b", f.b != 0.0 ? Json(f.a / f.b) : Json(nullptr)},
          {"c_lambda1", FloquetCoefficients::c_of(f.lambda1)},
          {"d_lambda1", FloquetCoefficients::d_of(f.lambda1)},
          {"c_plus_d", FloquetCoefficients::c_of(f.lambda1) + FloquetCoefficients::d_of(f.lambda1)}};
}

/// "%.17g", the round-trip precision used for every numeric CSV field.
inline std::string format_full(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// AutocorrSeries as CSV: header `t,C`, one row per time.
inline std::string series_to_csv(const AutocorrSeries& s) {
  std::string out = "t,C\n";
  for (std::size_t i = 0; i < s.times.size(); ++i) {
    out += format_full(s.times[i]) + "," + format_full(s.values[i]) + "\n";
  }
  return out;
}

}  // namespace edgequbit
