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
#include <string>
#include <string_view>
#include <vector>

#include "iiotcoop/campaign.hpp"
#include "iiotcoop/config.hpp"
#include "iiotcoop/config_text.hpp"

namespace iiotcoop {

/// One curve of an experiment.
struct PresetRun {
  std::string label;
  Mode mode = Mode::df_tdma;
  ScenarioConfig config;
  TrialOptions options;
};

/// Which metric an experiment is read for.
enum class PresetMetric { power_cdf, overflow, outage };

std::string_view to_string(PresetMetric m);

/// A figure-style experiment: several curves, optionally swept over one
/// parameter, all on the same master seed.
struct RunSpec {
  std::string name;
  std::string description;
  PresetMetric metric = PresetMetric::power_cdf;
  std::uint64_t trials = 500;
  std::vector<PresetRun> runs;
  std::optional<SweepSpec> sweep;
};

/// Reference factory scenario: 10 devices in 3 x 3 m, 0.1 ms cycle, 100 MHz
/// at 10 GHz, 30 dBm, -174 dBm/Hz, 7 dB shadowing, Rician K = 6.
ScenarioConfig reference_config();

/// Throws ConfigError for unknown names.
RunSpec preset(std::string_view name);

std::vector<std::string> preset_names();

}  // namespace iiotcoop
