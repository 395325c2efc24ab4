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
#include <vector>

#include "iiotcoop/config.hpp"
#include "iiotcoop/scenario.hpp"

namespace iiotcoop {

/// Partition of the devices into direct and relayed transmitters.
struct Schedule {
  std::vector<int> one_hop;
  std::vector<int> two_hop;
  std::vector<int> relay_of;   // per device; -1 for single-hop devices
  std::vector<int> relay_set;  // sorted distinct relays in use

  [[nodiscard]] std::size_t devices() const { return relay_of.size(); }
  [[nodiscard]] bool is_two_hop(std::size_t n) const { return relay_of[n] >= 0; }

  /// Rebuilds one_hop, two_hop and relay_set from relay_of.
  void rebuild();

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Every device single-hop.
Schedule all_direct(std::size_t devices);

/// Builds a schedule from a per-device relay map (-1 = direct).
Schedule schedule_from_relays(std::vector<int> relay_of);

/// DF selection metric 0.5 * min(|h_a|^2, |h_s|^2).
double df_relay_metric(const ChannelGains& gains, std::size_t n, std::size_t k);

/// AF selection metric 0.5 * log2(1 + g_d + g_af) at power p_ref on both hops.
double af_relay_metric(const ChannelGains& gains, std::size_t n, std::size_t k, double p_ref,
                       double beta, const ScenarioConfig& config);

/// DF classification. Device n relays through argmax_k of the DF metric when that
/// maximum strictly exceeds |h_d|^2; ties go to the lowest index.
Schedule classify_df(const ChannelGains& estimate);

/// AF classification: the AF metric at p_ref against log2(1 + g_d).
Schedule classify_af(const ChannelGains& estimate, double p_ref, const ScenarioConfig& config,
                     double beta = 1.0);

/// Keeps the DF relay choice but flips a fair coin per device for
/// direct versus relayed transmission.
Schedule classify_random(const ChannelGains& estimate, const ScenarioConfig& config,
                         std::uint64_t trial_index);

/// Every device relays through its best DF relay (K >= 1).
Schedule classify_all_cooperative(const ChannelGains& estimate);

/// Moves two-hop devices whose relay path has zero gain on either hop to
/// single-hop.
Schedule drop_degenerate_relays(Schedule schedule, const ChannelGains& estimate);

}  // namespace iiotcoop
