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
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "iiotcoop/campaign.hpp"
#include "iiotcoop/config.hpp"

namespace iiotcoop {

/// Frozen per-trial CSV header.
inline constexpr std::string_view kTrialCsvHeader =
    "trial,mode,n1h,n2h,total_power_dbm,feasible,overflow,outage,iterations";

/// Library version baked in at build time.
std::string_view library_version();

void write_trials_csv(std::ostream& out, const std::vector<TrialOutcome>& outcomes);
std::string trials_csv(const std::vector<TrialOutcome>& outcomes);

/// One summarised campaign inside a JSON report.
struct SummaryEntry {
  std::string label;
  ScenarioConfig config;
  MetricsSummary summary;
  std::optional<std::string> sweep_param;
  std::optional<double> sweep_value;
};

/// JSON document {version, runs: [{label, mode, config, trials, cdf, rates,
/// percentiles, ...}]}, pretty-printed with two-space indent.
std::string summary_json(const std::vector<SummaryEntry>& entries);

}  // namespace iiotcoop
