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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "iiotcoop/bandwidth.hpp"

namespace iiotcoop {
namespace {

struct Instance {
  ScenarioConfig config;
  ChannelGains gains;
  Schedule schedule;
  Allocation powers;
};

// N devices with random links; device n relays through relay n % K when
// `relay_mask` has bit n set.
Instance random_instance(std::mt19937_64& rng, std::size_t n, std::size_t k, unsigned relay_mask) {
  std::uniform_real_distribution<double> lg(-11.5, -8.5);
  std::uniform_real_distribution<double> ph(0.0, 6.283185307179586);
  const auto draw = [&] { return std::polar(std::sqrt(std::pow(10.0, lg(rng))), ph(rng)); };
  Instance in;
  in.config.n_devices = static_cast<int>(n);
  in.config.n_helpers = static_cast<int>(k);
  in.config.payload_bits = 2048;
  in.gains.devices = n;
  in.gains.helpers = k;
  for (std::size_t i = 0; i < n; ++i) in.gains.direct.push_back(draw());
  for (std::size_t i = 0; i < n * k; ++i) in.gains.access.push_back(draw());
  for (std::size_t i = 0; i < k; ++i) in.gains.backhaul.push_back(draw());
  std::vector<int> relay(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (relay_mask & (1u << i)) relay[i] = static_cast<int>(i % k);
  }
  in.schedule = schedule_from_relays(relay);
  in.powers = full_power_allocation(in.schedule, in.config);
  std::uniform_real_distribution<double> pw(-4.0, 0.0);
  for (auto& p : in.powers.p_dev) p = std::pow(10.0, pw(rng));
  for (int i : in.schedule.two_hop) in.powers.p_relay[i] = std::pow(10.0, pw(rng));
  return in;
}

double own_min_fraction(double snr, double required) {
  if (required <= 0) return 0.0;
  const auto eff = [&](double b) { return b * std::log2(1.0 + snr / b); };
  if (eff(1.0) < required) return std::numeric_limits<double>::infinity();
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (eff(mid) >= required ? hi : lo) = mid;
  }
  return hi;
}

TEST(Efficiency, Formula) {
  EXPECT_NEAR(fractional_efficiency(10.0, 0.5), 0.5 * std::log2(21.0), 1e-15);
  EXPECT_DOUBLE_EQ(fractional_efficiency(10.0, 0.0), 0.0);
  EXPECT_NEAR(fractional_efficiency_af(3.0, 20.0, 40.0, 0.5),
              0.25 * std::log2(1.0 + 6.0 + 800.0 / (60.5 * 0.5)), 1e-14);
}

TEST(Efficiency, IncreasingInBandwidth) {
  for (double snr : {0.01, 1.0, 1e3, 1e7}) {
    double previous = 0.0;
    for (double b = 0.01; b <= 1.0; b += 0.01) {
      const double e = fractional_efficiency(snr, b);
      EXPECT_GT(e, previous);
      previous = e;
    }
  }
}

TEST(MinFraction, SmallestSufficientFraction) {
  const auto eff = [](double b) { return fractional_efficiency(100.0, b); };
  const double need = 2.0;
  const double b = min_fraction(eff, need);
  EXPECT_GE(eff(b), need);
  EXPECT_LT(eff(b - 1e-9), need);
  EXPECT_EQ(min_fraction(eff, 0.0), 0.0);
  EXPECT_TRUE(std::isinf(min_fraction(eff, 100.0)));
}

TEST(MaxMinDf, BalancesTwoDirectDevices) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    Instance in = random_instance(rng, 2, 1, 0);
    const BandwidthSplit s = allocate_bandwidth_maxmin_df(in.schedule, in.gains, in.powers, in.config);
    const double n0 = in.config.noise_power_w();
    const double s0 = in.powers.p_dev[0] * in.gains.direct_gain(0) / n0;
    const double s1 = in.powers.p_dev[1] * in.gains.direct_gain(1) / n0;
    // Independent bisection on the split that equalises the two rates.
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      const double d = mid * std::log2(1 + s0 / mid) - (1 - mid) * std::log2(1 + s1 / (1 - mid));
      (d < 0 ? lo : hi) = mid;
    }
    EXPECT_NEAR(s.beta[0], lo, 1e-6);
    EXPECT_NEAR(s.beta[0] + s.beta[1], 1.0, 1e-12);
    const double r = in.config.bandwidth_hz * lo * std::log2(1 + s0 / lo);
    EXPECT_NEAR(s.r_min, r, 1e-5 * r);
  }
}

TEST(MaxMinDf, SplitRespectsBandAndPhaseCoupling) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    Instance in = random_instance(rng, 4, 2, static_cast<unsigned>(rng() % 16));
    const BandwidthSplit s = allocate_bandwidth_maxmin_df(in.schedule, in.gains, in.powers, in.config);
    const double total = std::accumulate(s.beta.begin(), s.beta.end(), 0.0);
    EXPECT_NEAR(total, 1.0, 1e-9);
    double coupling = 0.0;
    for (int n : in.schedule.two_hop) coupling += s.beta_s[n] - s.beta[n];
    EXPECT_LE(coupling, 1e-9);
    for (int n : in.schedule.one_hop) EXPECT_EQ(s.beta_s[n], 0.0);
  }
}

TEST(MaxMinAf, SplitSumsToOne) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Instance in = random_instance(rng, 4, 2, static_cast<unsigned>(rng() % 16));
    const BandwidthSplit s = allocate_bandwidth_maxmin_af(in.schedule, in.gains, in.powers, in.config);
    EXPECT_NEAR(std::accumulate(s.beta.begin(), s.beta.end(), 0.0), 1.0, 1e-9);
    for (int n : in.schedule.two_hop) EXPECT_GT(s.beta[n], 0.0);
  }
}

// Feasibility over (beta, beta_s, alpha) by a 4000-point alpha grid with
// independent minimal fractions.
bool grid_feasible_df(const Instance& in, double t_prime, double margin) {
  const ScenarioConfig& c = in.config;
  const double n0 = c.noise_power_w();
  const double w = c.bandwidth_hz;
  const double bits = c.payload_bits;
  const double alpha_max = 1.0 - c.processing_fraction - c.processing_time_s / t_prime;
  double one_hop = 0.0;
  for (int n : in.schedule.one_hop) {
    one_hop += own_min_fraction(in.powers.p_dev[n] * in.gains.direct_gain(n) / n0,
                                bits / (w * t_prime));
  }
  if (in.schedule.two_hop.empty()) return one_hop <= 1.0 + margin;
  for (int i = 1; i < 4000; ++i) {
    const double alpha = alpha_max * i / 4000.0;
    double first = 0.0, second = 0.0;
    for (int n : in.schedule.two_hop) {
      const auto k = static_cast<std::size_t>(in.schedule.relay_of[n]);
      first += own_min_fraction(in.powers.p_dev[n] * in.gains.access_gain(n, k) / n0,
                                bits / (w * alpha * t_prime));
      second += own_min_fraction(in.powers.p_relay[n] * in.gains.backhaul_gain(k) / n0,
                                 bits / (w * (alpha_max - alpha) * t_prime));
    }
    if (one_hop + std::max(first, second) <= 1.0 + margin) return true;
  }
  return false;
}

TEST(ScreenDf, AgreesWithAlphaGrid) {
  std::mt19937_64 rng(4);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Instance in = random_instance(rng, 3, 2, static_cast<unsigned>(1 + rng() % 7));
    in.config.payload_bits = std::pow(2.0, 8 + static_cast<int>(rng() % 8));
    const double t_prime = in.config.cycle_time_s;
    const FdmaScreen s = screen_df_fdma(in.schedule, in.gains, in.powers, in.config, t_prime, 1.0);
    // Skip instances within 1% of the boundary where the grid is too coarse.
    const bool loose = grid_feasible_df(in, t_prime, -0.01);
    const bool tight = grid_feasible_df(in, t_prime, 0.01);
    if (loose) {
      EXPECT_TRUE(s.feasible) << trial;
      ++feasible;
    } else if (!tight) {
      EXPECT_FALSE(s.feasible) << trial;
      ++infeasible;
    }
  }
  EXPECT_GT(feasible, 20);
  EXPECT_GT(infeasible, 20);
}

TEST(ScreenDf, WitnessFitsTheCycle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Instance in = random_instance(rng, 4, 2, static_cast<unsigned>(rng() % 16));
    const double t_prime = in.config.cycle_time_s;
    const FdmaScreen s = screen_df_fdma(in.schedule, in.gains, in.powers, in.config, t_prime, 1.0);
    if (!s.feasible) continue;
    Allocation a = in.powers;
    a.beta = s.split.beta;
    a.beta_s = s.split.beta_s;
    a.alpha = s.alpha;
    const AlphaRange r = df_fdma_alpha_range(in.schedule, in.gains, a, in.config, t_prime, 1.0);
    ASSERT_FALSE(r.empty());
    EXPECT_GE(s.alpha, r.lo - 1e-9);
    EXPECT_LE(s.alpha, r.hi + 1e-9);
    EXPECT_NEAR(std::accumulate(a.beta.begin(), a.beta.end(), 0.0), 1.0, 1e-9);
  }
}

TEST(ScreenAf, WitnessFitsTheCycle) {
  std::mt19937_64 rng(6);
  int feasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Instance in = random_instance(rng, 4, 2, static_cast<unsigned>(rng() % 16));
    const double t_prime = in.config.cycle_time_s;
    const FdmaScreen s = screen_af_fdma(in.schedule, in.gains, in.powers, in.config, t_prime, 1.0);
    if (!s.feasible) continue;
    ++feasible;
    Allocation a = in.powers;
    a.beta = s.split.beta;
    a.beta_s = s.split.beta_s;
    const double t = evaluate(Mode::af_fdma, in.schedule, a, in.gains, in.config, 1.0).total;
    EXPECT_LE(t, t_prime * (1 + 1e-9));
  }
  EXPECT_GT(feasible, 20);
}

TEST(AlphaRange, BoundsFollowPhaseTimes) {
  std::mt19937_64 rng(7);
  Instance in = random_instance(rng, 2, 1, 0b10);
  in.config.processing_time_s = 2e-6;
  Allocation a = in.powers;
  a.beta = {0.5, 0.5};
  a.beta_s = {0.0, 0.5};
  const double t_prime = 1e-4;
  const RateReport r = evaluate(Mode::df_fdma, in.schedule, a, in.gains, in.config, 1.0);
  const AlphaRange range = df_fdma_alpha_range(in.schedule, in.gains, a, in.config, t_prime, 1.0);
  EXPECT_NEAR(range.lo, r.time_phase1[1] / t_prime, 1e-15);
  EXPECT_NEAR(range.hi, 1.0 - in.config.processing_fraction - (r.time_phase2[1] + 2e-6) / t_prime,
              1e-15);
}

}  // namespace
}  // namespace iiotcoop
