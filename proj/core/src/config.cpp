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

#include "iiotcoop/config.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace iiotcoop {
namespace {

constexpr std::array<std::pair<Mode, std::string_view>, 6> kModeNames{{
    {Mode::single_hop, "single-hop"},
    {Mode::df_tdma, "df-tdma"},
    {Mode::df_fdma, "df-fdma"},
    {Mode::af_tdma, "af-tdma"},
    {Mode::af_fdma, "af-fdma"},
    {Mode::ris_tdma, "ris-tdma"},
}};

void require(bool ok, const char* field, const char* what) {
  if (!ok) throw ConfigError(std::string(field) + ": " + what);
}

}  // namespace

std::string_view to_string(CsiMode mode) {
  return mode == CsiMode::perfect ? "perfect" : "imperfect";
}

std::string_view to_string(Mode mode) {
  for (const auto& [m, name] : kModeNames) {
    if (m == mode) return name;
  }
  return "unknown";
}

std::optional<Mode> parse_mode(std::string_view name) {
  for (const auto& [m, n] : kModeNames) {
    if (n == name) return m;
  }
  return std::nullopt;
}

std::optional<CsiMode> parse_csi_mode(std::string_view name) {
  if (name == "perfect") return CsiMode::perfect;
  if (name == "imperfect") return CsiMode::imperfect;
  return std::nullopt;
}

bool is_fdma(Mode mode) { return mode == Mode::df_fdma || mode == Mode::af_fdma; }
bool is_af(Mode mode) { return mode == Mode::af_tdma || mode == Mode::af_fdma; }
bool is_relay_mode(Mode mode) {
  return mode == Mode::df_tdma || mode == Mode::df_fdma || is_af(mode);
}

void ScenarioConfig::validate() const {
  require(std::isfinite(area_side_m) && area_side_m > 0, "area_side", "must be > 0");
  require(n_devices >= 1, "n_devices", "must be >= 1");
  require(n_helpers >= 0, "n_helpers", "must be >= 0");
  require(ris_elements >= 0, "ris_elements", "must be >= 0");
  require(std::isfinite(payload_bits) && payload_bits >= 0, "payload_bits", "must be >= 0");
  require(std::isfinite(cycle_time_s) && cycle_time_s > 0, "cycle_time", "must be > 0");
  require(std::isfinite(bandwidth_hz) && bandwidth_hz > 0, "bandwidth", "must be > 0");
  require(std::isfinite(carrier_hz) && carrier_hz > 0, "carrier_freq", "must be > 0");
  require(std::isfinite(p_max_w) && p_max_w > 0, "p_max", "must be > 0");
  require(std::isfinite(noise_psd_w_hz) && noise_psd_w_hz > 0, "noise_psd", "must be > 0");
  require(std::isfinite(shadow_std_db) && shadow_std_db >= 0, "shadow_std", "must be >= 0");
  require(rician_k >= 0 && !std::isnan(rician_k), "rician_k", "must be >= 0");
  require(theta > 0 && theta <= 1, "theta", "must lie in (0, 1]");
  require(pilots >= 0, "pilots", "must be >= 0");
  require(processing_fraction >= 0 && processing_fraction < 1, "processing_fraction",
          "must lie in [0, 1)");
  require(std::isfinite(processing_time_s) && processing_time_s >= 0, "processing_time",
          "must be >= 0");
  require(std::isfinite(path_loss_exponent) && path_loss_exponent > 0, "path_loss_exponent",
          "must be > 0");
  require(std::isfinite(ris_element_gain_db), "ris_element_gain_db", "must be finite");
  if (uses_ris() && n_helpers > 0 && csi == CsiMode::imperfect) {
    require(pilots >= ris_elements + 1, "pilots", "RIS training needs pilots >= ris_elements + 1");
  }
}

void validate_mode(const ScenarioConfig& config, Mode mode) {
  if (is_relay_mode(mode) && config.uses_ris()) {
    throw ConfigError("mode: relay modes require ris_elements = 0");
  }
  if (mode == Mode::ris_tdma && !config.uses_ris() && config.n_helpers > 0) {
    throw ConfigError("mode: ris-tdma requires ris_elements >= 1 when n_helpers > 0");
  }
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double watts_to_dbm(double watts) { return 10.0 * std::log10(watts * 1000.0); }

}  // namespace iiotcoop
