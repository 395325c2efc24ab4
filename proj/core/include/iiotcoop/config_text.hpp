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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iiotcoop/campaign.hpp"
#include "iiotcoop/config.hpp"

namespace iiotcoop {

struct SweepSpec {
  SweepParam param = SweepParam::p_max;
  std::vector<double> values;
};

struct ConfigFile {
  ScenarioConfig scenario;
  std::optional<SweepSpec> sweep;
};

/// Parses flat `key = value` text. Blank lines and `#` comments are ignored.
///
/// Keys (one of each alternate pair):
///   area_m, n_devices, n_helpers, ris_elements, payload_bytes | payload_bits,
///   cycle_ms | cycle_s, bandwidth_mhz | bandwidth_hz, carrier_ghz | carrier_hz,
///   pmax_dbm | pmax_w, noise_psd_dbm_hz | noise_psd_w_hz, shadow_std_db,
///   rician_k (accepts inf), theta, pilots, csi, seed, processing_fraction,
///   processing_time_s, path_loss_exponent, ris_element_gain_db,
///   sweep.param, sweep.values (comma separated).
///
/// n_devices, n_helpers, the payload and p_max are required. Errors throw
/// ConfigError naming the key.
ConfigFile parse_config_file(std::string_view text);

/// Scenario part of parse_config_file; rejects sweep keys.
ScenarioConfig parse_config(std::string_view text);

/// Emits every field in SI units so that parse_config(render_config(c)) == c.
std::string render_config(const ScenarioConfig& config);

/// Reads a file and parses it. Throws ConfigError when unreadable.
ConfigFile load_config_file(const std::string& path);

}  // namespace iiotcoop
