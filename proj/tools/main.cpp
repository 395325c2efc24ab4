// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The iiotcoop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// iiotcoop command-line front end: run, sweep, preset, oracle-check.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "iiotcoop/campaign.hpp"
#include "iiotcoop/config_text.hpp"
#include "iiotcoop/grid_oracle.hpp"
#include "iiotcoop/presets.hpp"
#include "iiotcoop/report.hpp"

namespace fs = std::filesystem;
using namespace iiotcoop;

namespace {

struct Flags {
  std::string config_path;
  std::string mode = "df-tdma";
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::string out = "out";
  std::string preset_name;
  std::string classification = "algorithm";
  std::string phases = "closed_form";
  int oracle_instances = 50;
};

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

std::string value_tag(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string file_safe(std::string s) {
  for (char& c : s) {
    if (c == '/' || c == ' ') c = '_';
  }
  return s;
}

Mode mode_flag(const Flags& f) {
  const auto m = parse_mode(f.mode);
  if (!m) throw ConfigError("--mode: unknown mode '" + f.mode + "'");
  return *m;
}

TrialOptions options_flag(const Flags& f) {
  TrialOptions o;
  const auto c = parse_classification(f.classification);
  if (!c) throw ConfigError("--classification: unknown policy '" + f.classification + "'");
  const auto p = parse_phase_policy(f.phases);
  if (!p) throw ConfigError("--phases: unknown policy '" + f.phases + "'");
  o.classification = *c;
  o.phases = *p;
  return o;
}

ConfigFile load(const Flags& f) {
  if (f.config_path.empty()) throw ConfigError("--config: required");
  ConfigFile file = load_config_file(f.config_path);
  if (f.seed) file.scenario.master_seed = *f.seed;
  return file;
}

std::uint64_t trials_flag(const Flags& f, std::uint64_t fallback) {
  const std::uint64_t n = f.trials.value_or(fallback);
  if (n < 1) throw ConfigError("--trials: must be >= 1");
  return n;
}

// Runs one curve, writes its CSV and returns the summary entry.
SummaryEntry run_one(const std::string& label, const ScenarioConfig& config, Mode mode,
                     std::uint64_t trials, const TrialOptions& options, const fs::path& csv) {
  const auto outcomes = run_trials(config, mode, trials, options);
  write_file(csv, trials_csv(outcomes));
  SummaryEntry e;
  e.label = label;
  e.config = config;
  e.summary = summarize(mode, outcomes);
  return e;
}

void print_entry(const SummaryEntry& e) {
  const auto& s = e.summary;
  std::printf("%-28s %-10s p50=%8.2f dBm  overflow=%-12s outage=%-12s iters=%.2f\n",
              e.label.c_str(), std::string(to_string(s.mode)).c_str(), s.p50_dbm,
              s.overflow.display().c_str(), s.outage.display().c_str(), s.mean_iterations);
}

int cmd_run(const Flags& f) {
  const ConfigFile file = load(f);
  const Mode mode = mode_flag(f);
  const std::uint64_t trials = trials_flag(f, 500);
  fs::create_directories(f.out);
  SummaryEntry e = run_one(f.mode, file.scenario, mode, trials, options_flag(f),
                           fs::path(f.out) / "trials.csv");
  write_file(fs::path(f.out) / "summary.json", summary_json({e}));
  print_entry(e);
  return 0;
}

int cmd_sweep(const Flags& f) {
  const ConfigFile file = load(f);
  if (!file.sweep) throw ConfigError("sweep.param: missing required key");
  const Mode mode = mode_flag(f);
  const std::uint64_t trials = trials_flag(f, 500);
  fs::create_directories(f.out);
  const std::string param(to_string(file.sweep->param));
  std::vector<SummaryEntry> entries;
  for (double v : file.sweep->values) {
    const ScenarioConfig c = with_parameter(file.scenario, file.sweep->param, v);
    const std::string tag = param + "_" + value_tag(v);
    SummaryEntry e = run_one(f.mode + "@" + tag, c, mode, trials, options_flag(f),
                             fs::path(f.out) / (tag + ".csv"));
    e.sweep_param = param;
    e.sweep_value = v;
    print_entry(e);
    entries.push_back(std::move(e));
  }
  write_file(fs::path(f.out) / "summary.json", summary_json(entries));
  return 0;
}

int cmd_preset(const Flags& f) {
  if (f.preset_name.empty()) throw ConfigError("--preset: required");
  const RunSpec spec = preset(f.preset_name);
  const std::uint64_t trials = trials_flag(f, spec.trials);
  const fs::path dir = fs::path(f.out) / spec.name;
  fs::create_directories(dir);
  std::printf("%s: %s (%s, %llu trials)\n", spec.name.c_str(), spec.description.c_str(),
              std::string(to_string(spec.metric)).c_str(),
              static_cast<unsigned long long>(trials));
  std::vector<SummaryEntry> entries;
  for (PresetRun run : spec.runs) {
    if (f.seed) run.config.master_seed = *f.seed;
    if (!spec.sweep) {
      entries.push_back(run_one(run.label, run.config, run.mode, trials, run.options,
                                dir / (file_safe(run.label) + ".csv")));
      print_entry(entries.back());
      continue;
    }
    const std::string param(to_string(spec.sweep->param));
    for (double v : spec.sweep->values) {
      const ScenarioConfig c = with_parameter(run.config, spec.sweep->param, v);
      const std::string tag = file_safe(run.label) + "_" + param + "_" + value_tag(v);
      SummaryEntry e = run_one(run.label, c, run.mode, trials, run.options, dir / (tag + ".csv"));
      e.sweep_param = param;
      e.sweep_value = v;
      std::printf("  %s=%-6s ", param.c_str(), value_tag(v).c_str());
      print_entry(e);
      entries.push_back(std::move(e));
    }
  }
  write_file(dir / "summary.json", summary_json(entries));
  return 0;
}

int cmd_oracle(const Flags& f) {
  const std::uint64_t seed = f.seed.value_or(1);
  double worst = 0.0;
  for (const Mode m : {Mode::single_hop, Mode::df_tdma, Mode::df_fdma, Mode::af_tdma,
                       Mode::af_fdma, Mode::ris_tdma}) {
    const auto suite = oracle::run_oracle_suite(m, f.oracle_instances, seed);
    const double dev = suite.max_abs_deviation_db();
    worst = std::max(worst, dev);
    std::printf("%-10s instances=%zu rejected=%d max|dev|=%.4f dB\n",
                std::string(to_string(m)).c_str(), suite.cases.size(), suite.rejected, dev);
  }
  std::printf("max deviation: %.4f dB\n", worst);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cooperative IIoT subnetwork simulator"};
  app.set_version_flag("--version", std::string(library_version()));
  app.require_subcommand(1);
  Flags f;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", f.seed, "Master seed override");
    sub->add_option("--out", f.out, "Output directory")->capture_default_str();
  };
  const auto add_trial_flags = [&](CLI::App* sub) {
    sub->add_option("--config", f.config_path, "Scenario config file")->required();
    sub->add_option("--mode", f.mode,
                    "single-hop | df-tdma | df-fdma | af-tdma | af-fdma | ris-tdma")
        ->capture_default_str();
    sub->add_option("--trials", f.trials, "Monte Carlo trials (default 500)");
    sub->add_option("--classification", f.classification,
                    "algorithm | all_direct | all_cooperative | random")
        ->capture_default_str();
    sub->add_option("--phases", f.phases, "closed_form | sca | random")->capture_default_str();
    add_common(sub);
  };

  CLI::App* run = app.add_subcommand("run", "One campaign; writes trials.csv and summary.json");
  add_trial_flags(run);
  CLI::App* sw = app.add_subcommand("sweep", "Campaign per sweep.values entry of the config");
  add_trial_flags(sw);
  CLI::App* pre = app.add_subcommand("preset", "Figure-style experiment by name");
  pre->add_option("--preset", f.preset_name, "fig5, fig6, fig7a, fig7b, fig9 ... fig17")
      ->required();
  pre->add_option("--trials", f.trials, "Override the preset trial count");
  add_common(pre);
  CLI::App* orc = app.add_subcommand("oracle-check", "SPCA versus grid search on tiny instances");
  orc->add_option("--instances", f.oracle_instances, "Instances per mode")->capture_default_str();
  orc->add_option("--seed", f.seed, "Instance seed");
  CLI::App* list = app.add_subcommand("list-presets", "Print the preset names");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run) return cmd_run(f);
    if (*sw) return cmd_sweep(f);
    if (*pre) return cmd_preset(f);
    if (*orc) return cmd_oracle(f);
    if (*list) {
      for (const auto& n : preset_names()) std::printf("%s\n", n.c_str());
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 1;
}
