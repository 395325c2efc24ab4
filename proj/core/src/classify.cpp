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

#include "iiotcoop/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "iiotcoop/protocol.hpp"
#include "iiotcoop/rng.hpp"

namespace iiotcoop {
namespace {

// Index of the first maximum of metric(k) over k < helpers, or -1 if none.
template <typename Metric>
std::pair<int, double> argmax(std::size_t helpers, Metric metric) {
  int best = -1;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < helpers; ++k) {
    const double v = metric(k);
    if (v > best_value) {
      best_value = v;
      best = static_cast<int>(k);
    }
  }
  return {best, best_value};
}

}  // namespace

void Schedule::rebuild() {
  one_hop.clear();
  two_hop.clear();
  relay_set.clear();
  for (std::size_t n = 0; n < relay_of.size(); ++n) {
    if (relay_of[n] >= 0) {
      two_hop.push_back(static_cast<int>(n));
      relay_set.push_back(relay_of[n]);
    } else {
      one_hop.push_back(static_cast<int>(n));
    }
  }
  std::sort(relay_set.begin(), relay_set.end());
  relay_set.erase(std::unique(relay_set.begin(), relay_set.end()), relay_set.end());
}

Schedule all_direct(std::size_t devices) { return schedule_from_relays(std::vector<int>(devices, -1)); }

Schedule schedule_from_relays(std::vector<int> relay_of) {
  Schedule s;
  s.relay_of = std::move(relay_of);
  s.rebuild();
  return s;
}

double df_relay_metric(const ChannelGains& gains, std::size_t n, std::size_t k) {
  return 0.5 * std::min(gains.backhaul_gain(k), gains.access_gain(n, k));
}

double af_relay_metric(const ChannelGains& gains, std::size_t n, std::size_t k, double p_ref,
                       double beta, const ScenarioConfig& config) {
  const double g_d = p_ref * gains.direct_gain(n) / (beta * config.noise_power_w());
  const double g_af =
      af_snr(p_ref, gains.access_gain(n, k), p_ref, gains.backhaul_gain(k), beta, config);
  return 0.5 * std::log2(1.0 + g_d + g_af);
}

Schedule classify_df(const ChannelGains& estimate) {
  std::vector<int> relay(estimate.devices, -1);
  if (estimate.has_relays()) {
    for (std::size_t n = 0; n < estimate.devices; ++n) {
      const auto [k, value] =
          argmax(estimate.helpers, [&](std::size_t k) { return df_relay_metric(estimate, n, k); });
      if (value > estimate.direct_gain(n)) relay[n] = k;
    }
  }
  return schedule_from_relays(std::move(relay));
}

Schedule classify_af(const ChannelGains& estimate, double p_ref, const ScenarioConfig& config,
                     double beta) {
  std::vector<int> relay(estimate.devices, -1);
  if (estimate.has_relays()) {
    for (std::size_t n = 0; n < estimate.devices; ++n) {
      const auto [k, value] = argmax(estimate.helpers, [&](std::size_t k) {
        return af_relay_metric(estimate, n, k, p_ref, beta, config);
      });
      const double direct =
          std::log2(1.0 + p_ref * estimate.direct_gain(n) / (beta * config.noise_power_w()));
      if (value > direct) relay[n] = k;
    }
  }
  return schedule_from_relays(std::move(relay));
}

Schedule classify_random(const ChannelGains& estimate, const ScenarioConfig& config,
                         std::uint64_t trial_index) {
  std::vector<int> relay(estimate.devices, -1);
  if (estimate.has_relays()) {
    auto engine = make_engine(config.master_seed, trial_index, Stream::classification);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t n = 0; n < estimate.devices; ++n) {
      const bool relayed = coin(engine);
      if (!relayed) continue;
      relay[n] =
          argmax(estimate.helpers, [&](std::size_t k) { return df_relay_metric(estimate, n, k); })
              .first;
    }
  }
  return schedule_from_relays(std::move(relay));
}

Schedule classify_all_cooperative(const ChannelGains& estimate) {
  std::vector<int> relay(estimate.devices, -1);
  if (estimate.has_relays()) {
    for (std::size_t n = 0; n < estimate.devices; ++n) {
      relay[n] =
          argmax(estimate.helpers, [&](std::size_t k) { return df_relay_metric(estimate, n, k); })
              .first;
    }
  }
  return schedule_from_relays(std::move(relay));
}

Schedule drop_degenerate_relays(Schedule schedule, const ChannelGains& estimate) {
  bool changed = false;
  for (std::size_t n = 0; n < schedule.relay_of.size(); ++n) {
    const int k = schedule.relay_of[n];
    if (k < 0) continue;
    if (estimate.access_gain(n, k) <= 0 || estimate.backhaul_gain(k) <= 0) {
      schedule.relay_of[n] = -1;
      changed = true;
    }
  }
  if (changed) schedule.rebuild();
  return schedule;
}

}  // namespace iiotcoop
