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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace iiotcoop {

/// Raised for any invalid scenario or run configuration. The message names
/// the offending field.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class CsiMode { perfect, imperfect };

/// Transmission scheme evaluated by a trial.
enum class Mode { single_hop, df_tdma, df_fdma, af_tdma, af_fdma, ris_tdma };

std::string_view to_string(CsiMode mode);
std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view name);
std::optional<CsiMode> parse_csi_mode(std::string_view name);

bool is_fdma(Mode mode);
bool is_af(Mode mode);
bool is_relay_mode(Mode mode);

/// All physical and protocol parameters of one subnetwork scenario, in SI
/// units. Defaults follow the reference factory setup (3 x 3 m, 100 MHz at
/// 10 GHz, 0.1 ms cycle).
struct ScenarioConfig {
  double area_side_m = 3.0;
  int n_devices = 10;
  int n_helpers = 0;     // sAPs, or RISs when ris_elements > 0
  int ris_elements = 0;  // elements per RIS; 0 selects relay helpers
  double payload_bits = 256.0;
  double cycle_time_s = 1e-4;
  double bandwidth_hz = 100e6;
  double carrier_hz = 10e9;
  double p_max_w = 1.0;
  double noise_psd_w_hz = 3.9810717055349565e-21;  // -174 dBm/Hz
  double shadow_std_db = 7.0;
  double rician_k = 6.0;
  double theta = 1.0;
  int pilots = 4;
  double processing_fraction = 0.05;
  double processing_time_s = 0.0;
  CsiMode csi = CsiMode::perfect;
  std::uint64_t master_seed = 1;

  // Propagation knobs not pinned by the reference setup.
  double path_loss_exponent = 2.6;
  double ris_element_gain_db = 0.0;

  /// sigma_0 = noise_psd * W.
  [[nodiscard]] double noise_power_w() const { return noise_psd_w_hz * bandwidth_hz; }
  [[nodiscard]] bool uses_ris() const { return ris_elements > 0; }
  /// Discount applied to estimated rates; forced to 1 with perfect CSI.
  [[nodiscard]] double effective_theta() const {
    return csi == CsiMode::perfect ? 1.0 : theta;
  }

  /// Throws ConfigError naming the first violated field.
  void validate() const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Checks that `mode` can run on `config` (relay modes need relay helpers,
/// the RIS mode needs RIS helpers or none at all).
void validate_mode(const ScenarioConfig& config, Mode mode);

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

}  // namespace iiotcoop
