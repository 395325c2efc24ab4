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

#include <functional>
#include <vector>

#include "iiotcoop/classify.hpp"
#include "iiotcoop/config.hpp"
#include "iiotcoop/protocol.hpp"
#include "iiotcoop/scenario.hpp"

namespace iiotcoop {

/// Spectral efficiency beta * log2(1 + snr / beta) of a link whose SNR over
/// the full band is `snr`.
double fractional_efficiency(double snr, double beta);

/// AF counterpart 0.5 * beta * log2(1 + s_d / beta + s_s s_a / ((s_s + s_a + beta) beta)).
double fractional_efficiency_af(double snr_d, double snr_s, double snr_a, double beta);

/// Smallest beta in (0, 1] with efficiency(beta) >= required, assuming the
/// efficiency is increasing; +inf when unattainable, 0 when required <= 0.
double min_fraction(const std::function<double(double)>& efficiency, double required);

struct BandwidthSplit {
  std::vector<double> beta;
  std::vector<double> beta_s;  // zero for single-hop devices and for AF
  double r_min = 0.0;          // bits/s
};

/// Max-min rate bandwidth split for DF-FDMA at fixed powers: direct rates
/// and half of each relayed phase rate are balanced subject to
/// sum(beta) = 1 and sum over relayed devices of (beta_s - beta) <= 0.
BandwidthSplit allocate_bandwidth_maxmin_df(const Schedule& schedule, const ChannelGains& gains,
                                            const Allocation& powers, const ScenarioConfig& config);

/// Max-min rate bandwidth split for AF-FDMA at fixed powers.
BandwidthSplit allocate_bandwidth_maxmin_af(const Schedule& schedule, const ChannelGains& gains,
                                            const Allocation& powers, const ScenarioConfig& config);

struct FdmaScreen {
  bool feasible = false;
  BandwidthSplit split;
  double alpha = 0.0;
};

/// Exact DF-FDMA feasibility over (beta, beta_s, alpha) at the given powers
/// with the time split alpha / (1 - alpha - alpha_p). The witness spreads the
/// unused band proportionally.
FdmaScreen screen_df_fdma(const Schedule& schedule, const ChannelGains& gains,
                          const Allocation& powers, const ScenarioConfig& config, double t_prime,
                          double theta);

/// Exact AF-FDMA feasibility over beta at the given powers.
FdmaScreen screen_af_fdma(const Schedule& schedule, const ChannelGains& gains,
                          const Allocation& powers, const ScenarioConfig& config, double t_prime,
                          double theta);

/// Interval of alpha values that fit the DF-FDMA split for fixed powers and
/// bandwidth; empty (lo > hi) when none does or a single-hop device misses T'.
struct AlphaRange {
  double lo = 0.0;
  double hi = 0.0;
  [[nodiscard]] bool empty() const { return lo > hi; }
};
AlphaRange df_fdma_alpha_range(const Schedule& schedule, const ChannelGains& gains,
                               const Allocation& allocation, const ScenarioConfig& config,
                               double t_prime, double theta);

}  // namespace iiotcoop
