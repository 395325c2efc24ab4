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

#include "iiotcoop/presets.hpp"

#include <functional>
#include <utility>

namespace iiotcoop {
namespace {

PresetRun relay_run(std::string label, Mode mode, ScenarioConfig c, int helpers) {
  c.n_helpers = helpers;
  c.ris_elements = 0;
  if (helpers == 0) mode = Mode::single_hop;
  return {std::move(label), mode, c, {}};
}

PresetRun ris_run(std::string label, ScenarioConfig c, int ris, int elements,
                  PhasePolicy phases = PhasePolicy::closed_form) {
  c.n_helpers = ris;
  c.ris_elements = elements;
  c.pilots = elements + 1;
  PresetRun r{std::move(label), Mode::ris_tdma, c, {}};
  r.options.phases = phases;
  return r;
}

ScenarioConfig imperfect(ScenarioConfig c, double theta, int pilots) {
  c.csi = CsiMode::imperfect;
  c.theta = theta;
  c.pilots = pilots;
  return c;
}

// The default path loss leaves about 55 dB more margin than the reference
// channel model, so overflow and outage presets run shifted p_max values.
constexpr double kSweepOffsetDb = -55.0;

std::vector<double> range(double lo, double hi, double step) {
  std::vector<double> v;
  for (int i = 0; lo + i * step <= hi + 1e-9; ++i) v.push_back(lo + i * step);
  return v;
}

RunSpec fig5() {
  RunSpec s{"fig5", "DF-TDMA power CDF versus the number of sAPs, B = 32 bytes, 20 dBm",
            PresetMetric::power_cdf, 500, {}, {}};
  ScenarioConfig c = reference_config();
  c.payload_bits = 8 * 32;
  c.p_max_w = dbm_to_watts(20);
  s.runs.push_back(relay_run("1h", Mode::df_tdma, c, 0));
  s.runs.push_back(relay_run("1of1", Mode::df_tdma, c, 1));
  s.runs.push_back(relay_run("1of2", Mode::df_tdma, c, 2));
  s.runs.push_back(relay_run("1of4", Mode::df_tdma, c, 4));
  return s;
}

RunSpec fig6() {
  RunSpec s{"fig6", "DF-TDMA power CDF per classification method, one sAP, 20 dBm",
            PresetMetric::power_cdf, 500, {}, {}};
  ScenarioConfig c = reference_config();
  c.payload_bits = 8 * 32;
  c.p_max_w = dbm_to_watts(20);
  for (const auto cls : {Classification::algorithm, Classification::all_cooperative,
                         Classification::all_direct, Classification::random}) {
    PresetRun r = relay_run(std::string(to_string(cls)), Mode::df_tdma, c, 1);
    r.options.classification = cls;
    s.runs.push_back(std::move(r));
  }
  return s;
}

RunSpec fig7(const char* name, double bytes) {
  RunSpec s{name, "DF versus AF under TDMA and FDMA, four sAPs", PresetMetric::power_cdf, 500,
            {}, {}};
  ScenarioConfig c = reference_config();
  c.payload_bits = 8 * bytes;
  for (const Mode m : {Mode::df_tdma, Mode::af_tdma, Mode::df_fdma, Mode::af_fdma}) {
    s.runs.push_back(relay_run(std::string(to_string(m)), m, c, 4));
  }
  s.description += bytes == 64 ? ", B = 64 bytes" : ", B = 256 bytes";
  return s;
}

RunSpec fig9() {
  RunSpec s{"fig9",
            "Overflow rate at p_max versus p_max (-55 to -25 dBm), P-CSI and I-CSI with L = 4",
            PresetMetric::overflow, 2000, {},
            SweepSpec{SweepParam::p_max, range(kSweepOffsetDb, 30 + kSweepOffsetDb, 5)}};
  ScenarioConfig c = reference_config();
  c.payload_bits = 8 * 32;
  for (const int k : {0, 1, 2, 3, 4}) {
    const std::string base = k == 0 ? "1h" : "1of" + std::to_string(k);
    s.runs.push_back(relay_run(base + "/pcsi", Mode::df_tdma, c, k));
    s.runs.push_back(relay_run(base + "/theta0.5", Mode::df_tdma, imperfect(c, 0.5, 4), k));
    s.runs.push_back(relay_run(base + "/theta0.9", Mode::df_tdma, imperfect(c, 0.9, 4), k));
  }
  for (auto& r : s.runs) r.options.optimize = false;
  return s;
}

RunSpec fig10() {
  RunSpec s{"fig10", "Outage probability versus theta, I-CSI, L = 4, -30 dBm",
            PresetMetric::outage, 2000, {}, SweepSpec{SweepParam::theta, range(0.5, 0.9, 0.1)}};
  ScenarioConfig c = imperfect(reference_config(), 0.5, 4);
  c.payload_bits = 8 * 32;
  c.p_max_w = dbm_to_watts(25 + kSweepOffsetDb);
  for (const int k : {0, 1, 2, 3, 4}) {
    s.runs.push_back(relay_run(k == 0 ? "1h" : "1of" + std::to_string(k), Mode::df_tdma, c, k));
  }
  return s;
}

RunSpec fig11() {
  RunSpec s{"fig11", "RIS power CDF with 16 elements per RIS", PresetMetric::power_cdf, 500, {},
            {}};
  ScenarioConfig c = reference_config();
  c.payload_bits = 8 * 32;
  s.runs.push_back(relay_run("1h", Mode::single_hop, c, 0));
  s.runs.push_back(ris_run("1-RIS", c, 1, 16));
  s.runs.push_back(ris_run("4-RIS", c, 4, 16));
  s.runs.push_back(ris_run("4-RIS/random", c, 4, 16, PhasePolicy::random));
  s.runs.push_back(ris_run("4-RIS/theta0.5", imperfect(c, 0.5, 17), 4, 16));
  s.runs.push_back(ris_run("4-RIS/theta0.9", imperfect(c, 0.9, 17), 4, 16));
  return s;
}

RunSpec fig12() {
  RunSpec s{"fig12", "RIS power CDF with 16 and 64 elements, up to four RISs",
            PresetMetric::power_cdf, 500, {}, {}};
  ScenarioConfig c = reference_config();
  c.payload_bits = 8 * 32;
  s.runs.push_back(relay_run("1h", Mode::single_hop, c, 0));
  for (const int j : {16, 64}) {
    s.runs.push_back(ris_run("1-RIS/J" + std::to_string(j), c, 1, j));
    s.runs.push_back(ris_run("4-RIS/J" + std::to_string(j), c, 4, j));
  }
  return s;
}

RunSpec fig13() {
  RunSpec s{"fig13", "RIS versus DF relaying under TDMA", PresetMetric::power_cdf, 500, {}, {}};
  ScenarioConfig c = reference_config();
  c.payload_bits = 8 * 32;
  s.runs.push_back(relay_run("1of1", Mode::df_tdma, c, 1));
  s.runs.push_back(relay_run("1of4", Mode::df_tdma, c, 4));
  s.runs.push_back(ris_run("1-RIS/J64", c, 1, 64));
  s.runs.push_back(ris_run("4-RIS/J64", c, 4, 64));
  return s;
}

RunSpec ris_vs_relay_theta(const char* name, PresetMetric metric, int elements) {
  const int pilots = elements + 1;
  RunSpec s{name, "", metric, 2000, {}, SweepSpec{SweepParam::theta, range(0.5, 0.9, 0.1)}};
  s.description = std::string(metric == PresetMetric::overflow ? "Overflow rate" : "Outage") +
                  " versus theta, I-CSI, -32 dBm, J = " + std::to_string(elements) +
                  ", L = " + std::to_string(pilots);
  ScenarioConfig c = imperfect(reference_config(), 0.5, pilots);
  c.payload_bits = 8 * 32;
  c.p_max_w = dbm_to_watts(23 + kSweepOffsetDb);
  s.runs.push_back(relay_run("1of1", Mode::df_tdma, c, 1));
  s.runs.push_back(relay_run("1of2", Mode::df_tdma, c, 2));
  for (const int k : {1, 2, 3, 4}) {
    s.runs.push_back(ris_run(std::to_string(k) + "-RIS", c, k, elements));
  }
  return s;
}

const std::vector<std::pair<std::string, std::function<RunSpec()>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<RunSpec()>>> table{
      {"fig5", fig5},
      {"fig6", fig6},
      {"fig7a", [] { return fig7("fig7a", 64); }},
      {"fig7b", [] { return fig7("fig7b", 256); }},
      {"fig9", fig9},
      {"fig10", fig10},
      {"fig11", fig11},
      {"fig12", fig12},
      {"fig13", fig13},
      {"fig14", [] { return ris_vs_relay_theta("fig14", PresetMetric::overflow, 16); }},
      {"fig15", [] { return ris_vs_relay_theta("fig15", PresetMetric::outage, 16); }},
      {"fig16", [] { return ris_vs_relay_theta("fig16", PresetMetric::overflow, 64); }},
      {"fig17", [] { return ris_vs_relay_theta("fig17", PresetMetric::outage, 64); }},
  };
  return table;
}

}  // namespace

std::string_view to_string(PresetMetric m) {
  switch (m) {
    case PresetMetric::power_cdf:
      return "power_cdf";
    case PresetMetric::overflow:
      return "overflow";
    case PresetMetric::outage:
      return "outage";
  }
  return "unknown";
}

ScenarioConfig reference_config() {
  ScenarioConfig c;
  c.area_side_m = 3.0;
  c.n_devices = 10;
  c.n_helpers = 0;
  c.payload_bits = 8 * 32;
  c.cycle_time_s = 1e-4;
  c.bandwidth_hz = 100e6;
  c.carrier_hz = 10e9;
  c.p_max_w = dbm_to_watts(30);
  c.noise_psd_w_hz = dbm_to_watts(-174);
  c.shadow_std_db = 7.0;
  c.rician_k = 6.0;
  return c;
}

RunSpec preset(std::string_view name) {
  for (const auto& [n, make] : registry()) {
    if (n == name) return make();
  }
  throw ConfigError("preset: unknown name '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& entry : registry()) names.push_back(entry.first);
  return names;
}

}  // namespace iiotcoop
