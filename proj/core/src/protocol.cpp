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

#include "iiotcoop/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace iiotcoop {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double transfer_time(double bits, double rate) {
  if (bits <= 0) return 0.0;
  return rate > 0 ? bits / rate : kInf;
}

cdouble effective_ris_channel(const ChannelGains& gains, const Allocation& allocation,
                              std::size_t n) {
  if (gains.total_elements() == 0 || allocation.ris_phases.empty()) return gains.direct[n];
  return ris_effective_channel(gains.direct[n], gains.cascade_of(n), allocation.ris_phases[n]);
}

}  // namespace

double Allocation::total_power() const {
  return std::accumulate(p_dev.begin(), p_dev.end(), 0.0) +
         std::accumulate(p_relay.begin(), p_relay.end(), 0.0);
}

Allocation full_power_allocation(const Schedule& schedule, const ScenarioConfig& config) {
  const std::size_t n_dev = schedule.devices();
  Allocation a;
  a.p_dev.assign(n_dev, config.p_max_w);
  a.p_relay.assign(n_dev, 0.0);
  a.beta.assign(n_dev, 1.0);
  a.beta_s.assign(n_dev, 0.0);
  for (int n : schedule.two_hop) {
    a.p_relay[n] = config.p_max_w;
    a.beta_s[n] = 1.0;
  }
  return a;
}

double rate_direct(double p, double gain2, double beta, const ScenarioConfig& config) {
  const double snr = p * gain2 / (beta * config.noise_power_w());
  return config.bandwidth_hz * beta * std::log2(1.0 + snr);
}

double rate_df_phase2(double p_relay, double gain_a2, double p_dev, double gain_d2, double beta_s,
                      const ScenarioConfig& config) {
  const double noise = beta_s * config.noise_power_w();
  const double g_a = p_relay * gain_a2 / noise;
  const double g_d = p_dev * gain_d2 / noise;
  return config.bandwidth_hz * beta_s * std::log2(1.0 + g_a + g_d);
}

double af_snr(double p_dev, double gain_s2, double p_relay, double gain_a2, double beta,
              const ScenarioConfig& config) {
  const double noise = beta * config.noise_power_w();
  const double num = p_dev * p_relay * gain_a2 * gain_s2;
  if (num == 0) return 0.0;
  return num / ((p_dev * gain_s2 + p_relay * gain_a2 + noise) * noise);
}

double rate_af(double p_dev, double gain_d2, double gain_s2, double p_relay, double gain_a2,
               double beta, const ScenarioConfig& config) {
  const double g_d = p_dev * gain_d2 / (beta * config.noise_power_w());
  const double g_af = af_snr(p_dev, gain_s2, p_relay, gain_a2, beta, config);
  return 0.5 * config.bandwidth_hz * beta * std::log2(1.0 + g_d + g_af);
}

double af_amplification(double p_dev, double gain_s2, double beta, const ScenarioConfig& config) {
  return std::sqrt(1.0 / (p_dev * gain_s2 + beta * config.noise_power_w()));
}

cdouble ris_effective_channel(cdouble h_d, std::span<const cdouble> u,
                              std::span<const cdouble> v) {
  if (u.size() != v.size()) throw std::invalid_argument("ris_effective_channel: length mismatch");
  cdouble acc = h_d;
  for (std::size_t q = 0; q < u.size(); ++q) acc += std::conj(u[q]) * v[q];
  return acc;
}

RateReport evaluate(Mode mode, const Schedule& schedule, const Allocation& allocation,
                    const ChannelGains& gains, const ScenarioConfig& config, double theta) {
  const std::size_t n_dev = schedule.devices();
  const double noise = config.noise_power_w();
  const double bits = config.payload_bits;
  const bool fdma = is_fdma(mode);

  RateReport r;
  r.snr_direct.assign(n_dev, 0.0);
  r.snr_access.assign(n_dev, 0.0);
  r.snr_backhaul.assign(n_dev, 0.0);
  r.snr_af.assign(n_dev, 0.0);
  r.snr_ris.assign(n_dev, 0.0);
  r.amplification.assign(n_dev, 0.0);
  r.rate_direct.assign(n_dev, 0.0);
  r.rate_phase1.assign(n_dev, 0.0);
  r.rate_phase2.assign(n_dev, 0.0);
  r.rate_af.assign(n_dev, 0.0);
  r.rate_ris.assign(n_dev, 0.0);
  r.time_device.assign(n_dev, 0.0);
  r.time_phase1.assign(n_dev, 0.0);
  r.time_phase2.assign(n_dev, 0.0);

  for (std::size_t n = 0; n < n_dev; ++n) {
    const double beta = fdma ? allocation.beta[n] : 1.0;
    const double p = allocation.p_dev[n];

    if (mode == Mode::ris_tdma) {
      const double g2 = std::norm(effective_ris_channel(gains, allocation, n));
      r.snr_ris[n] = p * g2 / noise;
      r.rate_ris[n] = theta * rate_direct(p, g2, 1.0, config);
      r.time_device[n] = transfer_time(bits, r.rate_ris[n]);
      r.time_one_hop += r.time_device[n];
      continue;
    }

    const double gd = gains.direct_gain(n);
    r.snr_direct[n] = p * gd / (beta * noise);
    if (!schedule.is_two_hop(n)) {
      r.rate_direct[n] = theta * rate_direct(p, gd, beta, config);
      r.time_device[n] = transfer_time(bits, r.rate_direct[n]);
      r.time_one_hop = fdma ? std::max(r.time_one_hop, r.time_device[n])
                            : r.time_one_hop + r.time_device[n];
      continue;
    }

    const auto k = static_cast<std::size_t>(schedule.relay_of[n]);
    const double gs = gains.access_gain(n, k);
    const double ga = gains.backhaul_gain(k);
    const double ps = allocation.p_relay[n];
    if (is_af(mode)) {
      r.snr_access[n] = p * gs / (beta * noise);
      r.snr_backhaul[n] = ps * ga / (beta * noise);
      r.snr_af[n] = af_snr(p, gs, ps, ga, beta, config);
      r.amplification[n] = af_amplification(p, gs, beta, config);
      r.rate_af[n] = theta * rate_af(p, gd, gs, ps, ga, beta, config);
      r.time_device[n] = transfer_time(bits, r.rate_af[n]);
      if (fdma) {
        r.time_two_hop = std::max(r.time_two_hop, r.time_device[n]);
      } else {
        r.time_two_hop_1 += r.time_device[n];
      }
      continue;
    }

    // Decode-and-forward.
    const double beta_s = fdma ? allocation.beta_s[n] : 1.0;
    r.snr_access[n] = p * gs / (beta * noise);
    r.snr_backhaul[n] = ps * ga / (beta_s * noise);
    r.rate_phase1[n] = theta * rate_direct(p, gs, beta, config);
    // FDMA relays forward on their own subchannel, so the second phase has
    // no direct component.
    r.rate_phase2[n] = fdma ? theta * rate_direct(ps, ga, beta_s, config)
                            : theta * rate_df_phase2(ps, ga, p, gd, beta_s, config);
    r.time_phase1[n] = transfer_time(bits, r.rate_phase1[n]);
    r.time_phase2[n] = transfer_time(bits, r.rate_phase2[n]);
    r.time_device[n] = r.time_phase1[n] + r.time_phase2[n];
    if (fdma) {
      if (bits > 0) r.time_device[n] += config.processing_time_s;
      r.time_two_hop = std::max(r.time_two_hop, r.time_device[n]);
    } else {
      r.time_two_hop_1 += r.time_phase1[n];
      r.time_two_hop_2 += r.time_phase2[n];
    }
  }

  r.total = fdma ? std::max(r.time_one_hop, r.time_two_hop)
                 : r.time_one_hop + r.time_two_hop_1 + r.time_two_hop_2;
  return r;
}

double total_time(Mode mode, const Schedule& schedule, const Allocation& allocation,
                  const ChannelGains& gains, const ScenarioConfig& config) {
  return evaluate(mode, schedule, allocation, gains, config, config.effective_theta()).total;
}

bool overflow_check(double total, double t_prime) { return total > t_prime; }

bool outage_check(Mode mode, const Schedule& schedule, const Allocation& allocation,
                  const ChannelGains& truth, const ChannelGains& estimate,
                  const ScenarioConfig& config, double theta) {
  if (config.payload_bits <= 0) return false;
  const RateReport est = evaluate(mode, schedule, allocation, estimate, config, theta);
  const RateReport act = evaluate(mode, schedule, allocation, truth, config, 1.0);
  const auto exceeds = [](double planned, double achievable) {
    return planned > 0 && planned > achievable;
  };
  for (std::size_t n = 0; n < schedule.devices(); ++n) {
    if (mode == Mode::ris_tdma) {
      if (exceeds(est.rate_ris[n], act.rate_ris[n])) return true;
    } else if (!schedule.is_two_hop(n)) {
      if (exceeds(est.rate_direct[n], act.rate_direct[n])) return true;
    } else if (is_af(mode)) {
      if (exceeds(est.rate_af[n], act.rate_af[n])) return true;
    } else if (exceeds(est.rate_phase1[n], act.rate_phase1[n]) ||
               exceeds(est.rate_phase2[n], act.rate_phase2[n])) {
      return true;
    }
  }
  return false;
}

}  // namespace iiotcoop
