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
#include <vector>

#include "iiotcoop/classify.hpp"
#include "iiotcoop/config.hpp"
#include "iiotcoop/scenario.hpp"

namespace iiotcoop {

/// Decision variables of one trial. Per-device vectors have length N; relay
/// powers and second-phase bandwidths are zero for single-hop devices.
struct Allocation {
  std::vector<double> p_dev;
  std::vector<double> p_relay;
  std::vector<double> beta;
  std::vector<double> beta_s;
  double alpha = 0.5;
  std::vector<std::vector<cdouble>> ris_phases;  // N x Q, empty outside RIS mode

  /// Sum of device and relay powers.
  [[nodiscard]] double total_power() const;
};

/// TDMA allocation (beta = beta_s = 1) with every power at p_max.
Allocation full_power_allocation(const Schedule& schedule, const ScenarioConfig& config);

double rate_direct(double p, double gain2, double beta, const ScenarioConfig& config);

/// Second DF phase with coherent combining of relay and direct signals.
double rate_df_phase2(double p_relay, double gain_a2, double p_dev, double gain_d2, double beta_s,
                      const ScenarioConfig& config);

/// End-to-end AF SNR with the constant-power amplification substituted.
double af_snr(double p_dev, double gain_s2, double p_relay, double gain_a2, double beta,
              const ScenarioConfig& config);

/// (W beta / 2) log2(1 + g_d + g_af).
double rate_af(double p_dev, double gain_d2, double gain_s2, double p_relay, double gain_a2,
               double beta, const ScenarioConfig& config);

/// Amplification factor sqrt(1 / (P |h_s|^2 + beta sigma_0)).
double af_amplification(double p_dev, double gain_s2, double beta, const ScenarioConfig& config);

/// h_d + u^H v. Throws std::invalid_argument on length mismatch.
cdouble ris_effective_channel(cdouble h_d, std::span<const cdouble> u, std::span<const cdouble> v);

/// Per-device and aggregate SNRs, rates and times. Rates are the
/// theta-discounted values used for scheduling.
struct RateReport {
  std::vector<double> snr_direct;
  std::vector<double> snr_access;
  std::vector<double> snr_backhaul;
  std::vector<double> snr_af;
  std::vector<double> snr_ris;
  std::vector<double> amplification;

  std::vector<double> rate_direct;
  std::vector<double> rate_phase1;
  std::vector<double> rate_phase2;
  std::vector<double> rate_af;
  std::vector<double> rate_ris;

  std::vector<double> time_device;  // t_d or t_2h (with processing in FDMA)
  std::vector<double> time_phase1;
  std::vector<double> time_phase2;

  double time_one_hop = 0.0;     // TDMA sum or FDMA max
  double time_two_hop_1 = 0.0;   // TDMA first-phase sum
  double time_two_hop_2 = 0.0;   // TDMA second-phase sum
  double time_two_hop = 0.0;     // FDMA max over relayed devices
  double total = 0.0;
};

/// Evaluates every rate and time of `mode` on `gains` with discount theta.
/// A device with payload and zero rate gets infinite time.
RateReport evaluate(Mode mode, const Schedule& schedule, const Allocation& allocation,
                    const ChannelGains& gains, const ScenarioConfig& config, double theta);

/// Total uplink time of `mode` on `gains` with the configured effective theta.
double total_time(Mode mode, const Schedule& schedule, const Allocation& allocation,
                  const ChannelGains& gains, const ScenarioConfig& config);

bool overflow_check(double total, double t_prime);

/// True iff some device's theta-discounted estimated rate exceeds the true
/// rate of the same link under the same allocation.
bool outage_check(Mode mode, const Schedule& schedule, const Allocation& allocation,
                  const ChannelGains& truth, const ChannelGains& estimate,
                  const ScenarioConfig& config, double theta);

}  // namespace iiotcoop
