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

#include "iiotcoop/bandwidth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace iiotcoop {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kBisection = 100;

// Full-band SNRs of the links a device uses at the given powers.
struct LinkSnr {
  double direct = 0.0;
  double access = 0.0;
  double backhaul = 0.0;
};

LinkSnr link_snr(const Schedule& schedule, const ChannelGains& gains, const Allocation& powers,
                 const ScenarioConfig& config, std::size_t n) {
  const double noise = config.noise_power_w();
  LinkSnr s;
  s.direct = powers.p_dev[n] * gains.direct_gain(n) / noise;
  if (schedule.is_two_hop(n)) {
    const auto k = static_cast<std::size_t>(schedule.relay_of[n]);
    s.access = powers.p_dev[n] * gains.access_gain(n, k) / noise;
    s.backhaul = powers.p_relay[n] * gains.backhaul_gain(k) / noise;
  }
  return s;
}

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

// Spreads the unused band proportionally so that sum(beta) = 1.
void normalize_band(const Schedule& schedule, BandwidthSplit& split) {
  const double used = sum(split.beta);
  const std::size_t n_dev = split.beta.size();
  if (!(used > 0)) {
    std::fill(split.beta.begin(), split.beta.end(), 1.0 / static_cast<double>(n_dev));
    for (int n : schedule.two_hop) split.beta_s[n] = split.beta[n];
    return;
  }
  for (double& b : split.beta) b /= used;
  for (double& b : split.beta_s) b /= used;
}

// Scales the relayed first-phase fractions up to `two_hop_total`, sets the
// second-phase fractions to the same total and then spreads the unused band
// proportionally so that sum(beta) = 1.
void fill_band(const Schedule& schedule, BandwidthSplit& split, double two_hop_total) {
  double first = 0.0;
  double second = 0.0;
  for (int n : schedule.two_hop) {
    first += split.beta[n];
    second += split.beta_s[n];
  }
  for (int n : schedule.two_hop) {
    if (first > 0) split.beta[n] *= two_hop_total / first;
    if (second > 0) split.beta_s[n] *= two_hop_total / second;
  }
  normalize_band(schedule, split);
}

}  // namespace

double fractional_efficiency(double snr, double beta) {
  if (!(beta > 0)) return 0.0;
  return beta * std::log2(1.0 + snr / beta);
}

double fractional_efficiency_af(double snr_d, double snr_s, double snr_a, double beta) {
  if (!(beta > 0)) return 0.0;
  const double relayed = snr_s * snr_a == 0 ? 0.0 : snr_s * snr_a / ((snr_s + snr_a + beta) * beta);
  return 0.5 * beta * std::log2(1.0 + snr_d / beta + relayed);
}

double min_fraction(const std::function<double(double)>& efficiency, double required) {
  if (required <= 0) return 0.0;
  if (!(efficiency(1.0) >= required)) return kInf;
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < kBisection && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (efficiency(mid) >= required) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

BandwidthSplit allocate_bandwidth_maxmin_df(const Schedule& schedule, const ChannelGains& gains,
                                            const Allocation& powers,
                                            const ScenarioConfig& config) {
  const std::size_t n_dev = schedule.devices();
  std::vector<LinkSnr> snr(n_dev);
  double r_hi = kInf;
  for (std::size_t n = 0; n < n_dev; ++n) {
    snr[n] = link_snr(schedule, gains, powers, config, n);
    if (schedule.is_two_hop(n)) {
      r_hi = std::min({r_hi, 0.5 * fractional_efficiency(snr[n].access, 1.0),
                       0.5 * fractional_efficiency(snr[n].backhaul, 1.0)});
    } else {
      r_hi = std::min(r_hi, fractional_efficiency(snr[n].direct, 1.0));
    }
  }

  BandwidthSplit split;
  split.beta.assign(n_dev, 0.0);
  split.beta_s.assign(n_dev, 0.0);
  // Per-device minimal fractions at target r; returns the band needed.
  const auto need = [&](double r, BandwidthSplit& out) {
    double one_hop = 0.0;
    double first = 0.0;
    double second = 0.0;
    for (std::size_t n = 0; n < n_dev; ++n) {
      const LinkSnr s = snr[n];
      if (schedule.is_two_hop(n)) {
        out.beta[n] = min_fraction(
            [&](double b) { return 0.5 * fractional_efficiency(s.access, b); }, r);
        out.beta_s[n] = min_fraction(
            [&](double b) { return 0.5 * fractional_efficiency(s.backhaul, b); }, r);
        first += out.beta[n];
        second += out.beta_s[n];
      } else {
        out.beta[n] = min_fraction([&](double b) { return fractional_efficiency(s.direct, b); }, r);
        one_hop += out.beta[n];
      }
    }
    return std::pair{one_hop + std::max(first, second), std::max(first, second)};
  };

  double lo = 0.0;
  double hi = std::isfinite(r_hi) ? r_hi : 0.0;
  for (int i = 0; i < kBisection && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (need(mid, split).first <= 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double two_hop_total = need(lo, split).second;
  fill_band(schedule, split, two_hop_total);
  split.r_min = lo * config.bandwidth_hz;
  return split;
}

BandwidthSplit allocate_bandwidth_maxmin_af(const Schedule& schedule, const ChannelGains& gains,
                                            const Allocation& powers,
                                            const ScenarioConfig& config) {
  const std::size_t n_dev = schedule.devices();
  std::vector<std::function<double(double)>> eff(n_dev);
  double r_hi = kInf;
  for (std::size_t n = 0; n < n_dev; ++n) {
    const LinkSnr s = link_snr(schedule, gains, powers, config, n);
    if (schedule.is_two_hop(n)) {
      eff[n] = [s](double b) { return fractional_efficiency_af(s.direct, s.access, s.backhaul, b); };
    } else {
      eff[n] = [s](double b) { return fractional_efficiency(s.direct, b); };
    }
    r_hi = std::min(r_hi, eff[n](1.0));
  }

  BandwidthSplit split;
  split.beta.assign(n_dev, 0.0);
  split.beta_s.assign(n_dev, 0.0);
  const auto need = [&](double r) {
    double total = 0.0;
    for (std::size_t n = 0; n < n_dev; ++n) {
      split.beta[n] = min_fraction(eff[n], r);
      total += split.beta[n];
    }
    return total;
  };
  double lo = 0.0;
  double hi = std::isfinite(r_hi) ? r_hi : 0.0;
  for (int i = 0; i < kBisection && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (need(mid) <= 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  need(lo);
  normalize_band(schedule, split);
  for (double& b : split.beta_s) b = 0.0;
  split.r_min = lo * config.bandwidth_hz;
  return split;
}

FdmaScreen screen_df_fdma(const Schedule& schedule, const ChannelGains& gains,
                          const Allocation& powers, const ScenarioConfig& config, double t_prime,
                          double theta) {
  const std::size_t n_dev = schedule.devices();
  const double bits = config.payload_bits;
  const double w = config.bandwidth_hz;
  const double alpha_max = 1.0 - config.processing_fraction - config.processing_time_s / t_prime;
  // Spectral efficiency needed to move the payload within `budget` seconds.
  const auto required = [&](double budget) {
    if (bits <= 0) return 0.0;
    return budget > 0 ? bits / (theta * w * budget) : kInf;
  };

  FdmaScreen screen;
  BandwidthSplit& split = screen.split;
  split.beta.assign(n_dev, 0.0);
  split.beta_s.assign(n_dev, 0.0);
  std::vector<LinkSnr> snr(n_dev);
  double one_hop = 0.0;
  for (std::size_t n = 0; n < n_dev; ++n) {
    snr[n] = link_snr(schedule, gains, powers, config, n);
    if (!schedule.is_two_hop(n)) {
      const double s = snr[n].direct;
      split.beta[n] =
          min_fraction([s](double b) { return fractional_efficiency(s, b); }, required(t_prime));
      one_hop += split.beta[n];
    }
  }

  const auto phases = [&](double alpha, bool store) {
    double first = 0.0;
    double second = 0.0;
    for (int n : schedule.two_hop) {
      const LinkSnr s = snr[n];
      const double b1 = min_fraction([&](double b) { return fractional_efficiency(s.access, b); },
                                     required(alpha * t_prime));
      const double b2 =
          min_fraction([&](double b) { return fractional_efficiency(s.backhaul, b); },
                       required((alpha_max - alpha) * t_prime));
      if (store) {
        split.beta[n] = b1;
        split.beta_s[n] = b2;
      }
      first += b1;
      second += b2;
    }
    return std::pair{first, second};
  };

  double alpha = 0.5 * alpha_max;
  double two_hop_total = 0.0;
  if (!schedule.two_hop.empty() && alpha_max > 0) {
    double lo = 0.0;
    double hi = alpha_max;
    for (int i = 0; i < kBisection && hi - lo > 1e-15; ++i) {
      const double mid = 0.5 * (lo + hi);
      const auto [first, second] = phases(mid, false);
      if (first > second) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const auto at_lo = phases(lo, false);
    const auto at_hi = phases(hi, false);
    alpha = std::max(at_lo.first, at_lo.second) <= std::max(at_hi.first, at_hi.second) ? lo : hi;
    const auto chosen = phases(alpha, true);
    two_hop_total = std::max(chosen.first, chosen.second);
  } else if (!schedule.two_hop.empty()) {
    two_hop_total = kInf;
  }

  screen.alpha = alpha;
  screen.feasible = one_hop + two_hop_total <= 1.0;
  if (screen.feasible) fill_band(schedule, split, two_hop_total);
  return screen;
}

FdmaScreen screen_af_fdma(const Schedule& schedule, const ChannelGains& gains,
                          const Allocation& powers, const ScenarioConfig& config, double t_prime,
                          double theta) {
  const std::size_t n_dev = schedule.devices();
  const double bits = config.payload_bits;
  const double req = bits <= 0 ? 0.0 : bits / (theta * config.bandwidth_hz * t_prime);
  FdmaScreen screen;
  screen.split.beta.assign(n_dev, 0.0);
  screen.split.beta_s.assign(n_dev, 0.0);
  double total = 0.0;
  for (std::size_t n = 0; n < n_dev; ++n) {
    const LinkSnr s = link_snr(schedule, gains, powers, config, n);
    if (schedule.is_two_hop(n)) {
      screen.split.beta[n] = min_fraction(
          [s](double b) { return fractional_efficiency_af(s.direct, s.access, s.backhaul, b); },
          req);
    } else {
      screen.split.beta[n] =
          min_fraction([s](double b) { return fractional_efficiency(s.direct, b); }, req);
    }
    total += screen.split.beta[n];
  }
  screen.feasible = total <= 1.0;
  if (screen.feasible) normalize_band(schedule, screen.split);
  for (double& b : screen.split.beta_s) b = 0.0;
  return screen;
}

AlphaRange df_fdma_alpha_range(const Schedule& schedule, const ChannelGains& gains,
                               const Allocation& allocation, const ScenarioConfig& config,
                               double t_prime, double theta) {
  const RateReport r = evaluate(Mode::df_fdma, schedule, allocation, gains, config, theta);
  AlphaRange range{0.0, 1.0 - config.processing_fraction};
  if (r.time_one_hop > t_prime) return {1.0, 0.0};
  for (int n : schedule.two_hop) {
    range.lo = std::max(range.lo, r.time_phase1[n] / t_prime);
    const double tail = r.time_phase2[n] + config.processing_time_s;
    range.hi = std::min(range.hi, 1.0 - config.processing_fraction - tail / t_prime);
  }
  return range;
}

}  // namespace iiotcoop
