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

#include <span>
#include <string_view>
#include <vector>

#include "iiotcoop/classify.hpp"
#include "iiotcoop/config.hpp"
#include "iiotcoop/protocol.hpp"
#include "iiotcoop/scenario.hpp"

namespace iiotcoop {

enum class SolveStatus { optimal, max_iter, infeasible_at_pmax, numerical_failure };

std::string_view to_string(SolveStatus status);

struct SolveReport {
  Allocation allocation;
  SolveStatus status = SolveStatus::numerical_failure;
  int iterations = 0;    // outer SPCA iterations
  int newton_steps = 0;  // summed over all convex solves
  double objective_watts = 0.0;
  double initial_objective_watts = 0.0;
  /// Total power of the starting point followed by every accepted iterate.
  std::vector<double> objective_trace;
  double kkt_residual = 0.0;
};

struct SpcaOptions {
  double tolerance = 1e-6;  // relative objective change
  int max_iterations = 50;
};

/// Time budget and rate discount implied by the CSI mode.
struct Budget {
  double t_prime = 0.0;
  double theta = 1.0;
};
Budget budget_of(const ScenarioConfig& config);

/// Whether the schedule fits T' with every node at p_max. FDMA modes search
/// the bandwidth split (and the DF time split) exactly. `ris_phases` applies
/// to ris_tdma only; empty means direct links alone.
bool feasible_at_pmax(Mode mode, const Schedule& schedule, const ChannelGains& estimate,
                      const ScenarioConfig& config,
                      std::span<const std::vector<cdouble>> ris_phases = {});

SolveReport minimize_power_df_tdma(const Schedule& schedule, const ChannelGains& estimate,
                                   const ScenarioConfig& config, const SpcaOptions& options = {});
SolveReport minimize_power_df_fdma(const Schedule& schedule, const ChannelGains& estimate,
                                   const ScenarioConfig& config, const SpcaOptions& options = {});
SolveReport minimize_power_af_tdma(const Schedule& schedule, const ChannelGains& estimate,
                                   const ScenarioConfig& config, const SpcaOptions& options = {});
SolveReport minimize_power_af_fdma(const Schedule& schedule, const ChannelGains& estimate,
                                   const ScenarioConfig& config, const SpcaOptions& options = {});

/// Power stage of the RIS scheme with one phase vector per device fixed.
SolveReport minimize_power_ris(const ChannelGains& estimate,
                               const std::vector<std::vector<cdouble>>& phases,
                               const ScenarioConfig& config, const SpcaOptions& options = {});

/// Dispatch on mode; single_hop ignores the schedule and uses direct links.
SolveReport minimize_power(Mode mode, const Schedule& schedule, const ChannelGains& estimate,
                           const ScenarioConfig& config,
                           const std::vector<std::vector<cdouble>>& ris_phases = {},
                           const SpcaOptions& options = {});

}  // namespace iiotcoop
