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

// edgequbit command-line driver.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "edgequbit/edgequbit.hpp"

namespace fs = std::filesystem;
using namespace edgequbit;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitValidation = 2;

struct Common {
  std::string config;
  std::string out;
  bool force = false;
  std::optional<double> threshold;
};

void write_file(const fs::path& p, const std::string& text, bool force) {
  if (fs::exists(p) && !force) throw ValidationError(p.string() + " exists; pass --force to overwrite");
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write " + p.string());
  out << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Config load(const Common& c) {
  Config cfg = load_config(c.config);
  if (!c.out.empty()) cfg.output.dir = c.out;
  if (c.threshold) {
    if (!(*c.threshold > 0.0 && *c.threshold < 1.0)) throw ValidationError("--threshold: must lie in (0, 1)");
    cfg.run.threshold = *c.threshold;
  }
  return cfg;
}

int cmd_autocorr(const Common& c) {
  const Config cfg = load(c);
  const fs::path dir = cfg.output.dir;
  const auto results = analyse_model(cfg.model, cfg.run);
  Json records = Json::array();
  for (const auto& r : results) {
    const std::string slug = observable_slug(r.label);
    if (cfg.output.series) {
      write_file(dir / (slug + ".csv"), series_to_csv(r.series), c.force);
      Json side;
      side["model"] = model_to_json(cfg.model);
      side["operator"] = r.label;
      side["time_grid"] = {{"t_min", cfg.run.grid.t_min}, {"t_max", cfg.run.grid.t_max}, {"points", cfg.run.grid.points}};
      side["c0"] = r.series.c0;
      side["dc_weight"] = r.dc_weight;
      write_file(dir / (slug + ".json"), side.dump(2) + "\n", c.force);
    }
    Json rec = decay_to_json(r.decay);
    rec["operator"] = r.label;
    rec["dc_weight"] = r.dc_weight;
    if (r.window_plateau) rec["plateau"] = *r.window_plateau;
    records.push_back(rec);
    std::printf("%-12s %s = %.6g%s  dc = %.6g\n", r.label.c_str(), decay_kind_name(r.decay.kind).c_str(),
                r.decay.T, r.decay.censored ? " (censored)" : "", r.dc_weight);
  }
  write_file(dir / "decay.json", records.dump(2) + "\n", c.force);
  write_file(dir / "config.json", config_to_json(cfg).dump(2) + "\n", c.force);
  return 0;
}

int cmd_dualize(const std::string& input, const std::string& output, int L, bool strict, bool force) {
  const DualityContext ctx(L);
  const OperatorSum<Complex> op = operator_from_text(L, read_file(input));
  const std::string text = to_text(dualize(op, ctx, strict));
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    write_file(output, text, force);
  }
  return 0;
}

template <class S>
void emit_expansion(const SZMExpansion<S>& e, const fs::path& dir, bool force, Json& poles) {
  for (int n = 0; n <= e.computed_order(); ++n) {
    const fs::path p = dir / ("psi_" + seed_name(e.seed) + "_order" + std::to_string(n) + ".txt");
    write_file(p, to_text(e.orders[static_cast<std::size_t>(n)]), force);
    std::printf("%s order %d: %zu terms\n", seed_name(e.seed).c_str(), n, e.orders[static_cast<std::size_t>(n)].size());
  }
  for (const auto& p : e.poles) {
    poles.push_back(pole_to_json(p));
    std::printf("%s pole at order %d: lambda1/lambda2 = %s (%s)\n", seed_name(p.seed).c_str(), p.order,
                p.ratio().c_str(), p.denominator().c_str());
  }
}

int cmd_szm(const Common& c, std::optional<int> seed_order) {
  Config cfg = load(c);
  SZMConfig z = cfg.szm.value_or(SZMConfig{});
  if (seed_order) {
    if (*seed_order < 0 || *seed_order > kMaxSZMOrder) {
      throw ValidationError("--seed-order: must be in [0, " + std::to_string(kMaxSZMOrder) + "]");
    }
    z.order = *seed_order;
  }
  SZMOptions opts;
  opts.throw_on_pole = z.throw_on_pole;
  const fs::path dir = cfg.output.dir;
  Json poles = Json::array();
  for (Seed s : z.seeds) {
    if (z.exact) {
      emit_expansion(expand_szm_exact(cfg.model, s, z.order, opts), dir, c.force, poles);
    } else {
      emit_expansion(expand_szm(cfg.model, s, z.order, opts), dir, c.force, poles);
    }
  }
  write_file(dir / "poles.json", poles.dump(2) + "\n", c.force);
  return 0;
}

int cmd_resonances(int q_max, int n_max) {
  if (q_max < 1) throw ValidationError("--q-max: must be positive");
  std::printf("p,q,sigma_z_resonant,sigma_x_resonant,order_z,order_x,order_joint\n");
  auto show = [](std::optional<int> o) { return o ? std::to_string(*o) : std::string("-"); };
  for (long long p = 1; p <= q_max; ++p) {
    for (long long q = 1; q <= q_max; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const ResonanceReport r = predict_resonance(p, q, n_max);
      std::printf("%lld,%lld,%d,%d,%s,%s,%s\n", p, q, r.sigma_z_resonant, r.sigma_x_resonant,
                  show(r.order_z).c_str(), show(r.order_x).c_str(), show(r.order_joint).c_str());
    }
  }
  return 0;
}

int cmd_sweep(const Common& c, int workers) {
  const Config cfg = load(c);
  const SweepPlan plan = SweepPlan::from_config(cfg);
  const SweepResult r = run_sweep(plan, workers);
  write_sweep_outputs(plan, r, cfg.output.dir, c.force, cfg.output.series);
  std::size_t failed = 0;
  for (const auto& rec : r.records) {
    if (rec.error) {
      ++failed;
      std::fprintf(stderr, "point %zu (%s = %g) failed: %s\n", rec.index, plan.axis.axis.c_str(), rec.value,
                   rec.error->c_str());
    }
  }
  std::printf("%zu points, %zu failed, summary in %s\n", r.records.size(), failed,
              (fs::path(cfg.output.dir) / "summary.csv").string().c_str());
  return 0;
}

int cmd_floquet(double l1, double l2) {
  std::cout << floquet_to_json(floquet_coefficients(l1, l2)).dump(2) << "\n";
  return 0;
}

int cmd_validate(const std::string& path) {
  std::cout << config_to_json(load_config(path)).dump(2) << "\n";
  return 0;
}

void add_common(CLI::App* sub, Common& c, bool needs_config = true) {
  auto* opt = sub->add_option("--config", c.config, "JSON configuration file");
  if (needs_config) opt->required()->check(CLI::ExistingFile);
  sub->add_option("--out", c.out, "Output directory (overrides output.dir)");
  sub->add_flag("--force", c.force, "Overwrite existing output files");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-qubit coherence toolkit: exact dynamics, duality and strong-zero-mode expansions"};
  app.require_subcommand(1);

  Common ac;
  auto* autocorr = app.add_subcommand("autocorr", "Autocorrelators and decay times for the configured observables");
  add_common(autocorr, ac);
  autocorr->add_option("--threshold", ac.threshold, "Decay threshold on C(t)/C(0) (default 1/e)");

  std::string dual_in, dual_out;
  int dual_L = 0;
  bool dual_strict = false, dual_force = false;
  auto* dualize_cmd = app.add_subcommand("dualize", "Apply the Kennedy-Tasaki duality to an operator file");
  dualize_cmd->add_option("input", dual_in, "Operator in the term format")->required()->check(CLI::ExistingFile);
  dualize_cmd->add_option("--L", dual_L, "Chain length (even)")->required();
  dualize_cmd->add_option("--out", dual_out, "Output file (default stdout)");
  dualize_cmd->add_flag("--strict", dual_strict, "Reject operators that are not symmetric");
  dualize_cmd->add_flag("--force", dual_force, "Overwrite an existing output file");

  Common sc;
  std::optional<int> seed_order;
  auto* szm = app.add_subcommand("szm", "Perturbative strong-zero-mode expansion and pole report");
  add_common(szm, sc);
  szm->add_option("--seed-order", seed_order, "Highest order to compute (overrides szm.order)");

  int q_max = 7, n_max = 12;
  auto* res = app.add_subcommand("resonances", "Parity-rule resonance table for coprime p, q <= q-max");
  res->add_option("--q-max", q_max, "Largest p and q");
  res->add_option("--n-max", n_max, "Largest order searched by the oracle")->check(CLI::Range(0, 12));

  Common wc;
  int workers = 1;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep plan");
  add_common(sweep, wc);
  sweep->add_option("--workers", workers, "Parallel worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--threshold", wc.threshold, "Decay threshold on C(t)/C(0) (default 1/e)");

  double fl1 = 0.0, fl2 = 0.0;
  auto* floquet = app.add_subcommand("floquet-coeffs", "Coefficients of the zeroth-order Floquet Hamiltonian");
  floquet->add_option("--lambda1", fl1, "Drive amplitude lambda1")->required();
  floquet->add_option("--lambda2", fl2, "Drive amplitude lambda2")->required();

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Validate a configuration and print its canonical form");
  validate->add_option("--config", validate_path, "JSON configuration file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*autocorr) return cmd_autocorr(ac);
    if (*dualize_cmd) return cmd_dualize(dual_in, dual_out, dual_L, dual_strict, dual_force);
    if (*szm) return cmd_szm(sc, seed_order);
    if (*res) return cmd_resonances(q_max, n_max);
    if (*sweep) return cmd_sweep(wc, workers);
    if (*floquet) return cmd_floquet(fl1, fl2);
    if (*validate) return cmd_validate(validate_path);
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
  return 0;
}
