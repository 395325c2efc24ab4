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
#include <utility>
#include <vector>

#include "iiotcoop/config.hpp"
#include "iiotcoop/optimizer.hpp"

namespace iiotcoop {

enum class Classification { algorithm, all_direct, all_cooperative, random };
enum class PhasePolicy { closed_form, sca, random };

std::string_view to_string(Classification c);
std::string_view to_string(PhasePolicy p);
std::optional<Classification> parse_classification(std::string_view name);
std::optional<PhasePolicy> parse_phase_policy(std::string_view name);

struct TrialOptions {
  Classification classification = Classification::algorithm;
  PhasePolicy phases = PhasePolicy::closed_form;
  /// When false only the p_max screen runs; feasible trials then report the
  /// p_max policy power and no outage.
  bool optimize = true;
};

struct TrialOutcome {
  std::uint64_t trial_index = 0;
  Mode mode = Mode::df_tdma;
  int n1h = 0;
  int n2h = 0;
  double total_power_w = 0.0;
  double total_power_dbm = 0.0;
  bool feasible = false;
  bool overflow = false;
  bool outage = false;
  int iterations = 0;
  SolveStatus status = SolveStatus::optimal;
  bool recheck_ok = true;
  double wall_time_s = 0.0;
};

/// Floor applied before converting a zero power to dBm.
inline constexpr double kPowerFloorW = 1e-30;

/// 10 log10(watts * 1000) with the floor above.
double power_dbm(double watts);

/// Topology -> channels -> estimates -> schedule -> screen -> optimise ->
/// exact recheck -> outage. Never throws for solver trouble; the status is
/// recorded instead.
TrialOutcome run_trial(const ScenarioConfig& config, Mode mode, std::uint64_t trial_index,
                       const TrialOptions& options = {});

/// Trials 0..n_trials-1 on `workers` threads (0 = default_workers()).
/// Results are ordered by trial index whatever the worker count.
std::vector<TrialOutcome> run_trials(const ScenarioConfig& config, Mode mode,
                                     std::uint64_t n_trials, const TrialOptions& options = {},
                                     unsigned workers = 0);

/// Worker count from IIOTCOOP_WORKERS, else the hardware concurrency.
unsigned default_workers();

/// Right-continuous empirical CDF as sorted (value, P[X <= value]) pairs with
/// one point per distinct value. Throws std::invalid_argument when empty.
std::vector<std::pair<double, double>> empirical_cdf(std::vector<double> values);

/// Evaluates a CDF from empirical_cdf at x.
double cdf_at(const std::vector<std::pair<double, double>>& cdf, double x);

/// Linear-interpolation quantile of sorted data, q in [0, 1].
double quantile(const std::vector<double>& sorted, double q);

/// Event frequency with the 1/n floor: zero counts are reported as an upper
/// bound rather than as a rate.
struct RateEstimate {
  std::uint64_t count = 0;
  std::uint64_t trials = 0;
  std::optional<double> rate;  // count / trials when count > 0
  double upper_bound = 0.0;    // 1 / trials when count == 0
  [[nodiscard]] std::string display() const;
  /// count / trials, including zero.
  [[nodiscard]] double value() const;
};
RateEstimate make_rate(std::uint64_t count, std::uint64_t trials);

struct MetricsSummary {
  Mode mode = Mode::df_tdma;
  std::uint64_t trial_count = 0;
  std::uint64_t feasible_count = 0;
  std::vector<std::pair<double, double>> cdf_points;  // dBm of non-overflow trials
  RateEstimate overflow;
  RateEstimate outage;
  double p5_dbm = 0.0;
  double p50_dbm = 0.0;
  double p95_dbm = 0.0;
  double mean_iterations = 0.0;
  std::uint64_t recheck_failures = 0;
  std::uint64_t solver_failures = 0;
};

/// Order-independent aggregation.
MetricsSummary summarize(Mode mode, const std::vector<TrialOutcome>& outcomes);

MetricsSummary run_campaign(const ScenarioConfig& config, Mode mode, std::uint64_t n_trials,
                            const TrialOptions& options = {}, unsigned workers = 0);

enum class SweepParam { p_max, theta, helpers, elements, payload, pilots };

std::string_view to_string(SweepParam p);
std::optional<SweepParam> parse_sweep_param(std::string_view name);

/// Config with one swept parameter replaced. p_max is in dBm, payload in
/// bytes. Sweeping RIS elements also sets the pilots to elements + 1.
ScenarioConfig with_parameter(ScenarioConfig config, SweepParam param, double value);

/// One campaign per value with the same master seed, so trials are paired
/// across values.
std::vector<MetricsSummary> sweep(const ScenarioConfig& config, Mode mode, SweepParam param,
                                  const std::vector<double>& values, std::uint64_t n_trials,
                                  const TrialOptions& options = {}, unsigned workers = 0);

}  // namespace iiotcoop
