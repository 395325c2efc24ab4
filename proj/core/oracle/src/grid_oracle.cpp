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

#include "iiotcoop/grid_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "iiotcoop/classify.hpp"
#include "iiotcoop/optimizer.hpp"
#include "iiotcoop/ris_phases.hpp"
#include "iiotcoop/scenario.hpp"

namespace iiotcoop::oracle {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Shannon rate over a fraction `beta` of the band at received power `rx`.
double shannon(const TinyInstance& in, double rx, double beta) {
  return in.bandwidth * beta * std::log2(1.0 + rx / (beta * in.noise));
}

double seconds(const TinyInstance& in, double rate) {
  if (in.bits <= 0) return 0.0;
  return rate > 0 ? in.bits / (in.theta * rate) : kInf;
}

double af_rate(const TinyInstance& in, const TinyDevice& d, double p, double ps) {
  const double bn = d.beta * in.noise;
  const double xs = p * d.gs;
  const double xa = ps * d.ga;
  const double g_af = xs * xa / ((xs + xa + bn) * bn);
  return 0.5 * in.bandwidth * d.beta * std::log2(1.0 + p * d.gd / bn + g_af);
}

// Per-device times: {direct or first hop, second hop}.
std::pair<double, double> device_times(const TinyInstance& in, const TinyDevice& d, double p,
                                       double ps) {
  if (!d.two_hop) return {seconds(in, shannon(in, p * d.gd, d.beta)), 0.0};
  if (is_af(in.mode)) return {seconds(in, af_rate(in, d, p, ps)), 0.0};
  const double t1 = seconds(in, shannon(in, p * d.gs, d.beta));
  const double rx2 = in.mode == Mode::df_fdma ? ps * d.ga : ps * d.ga + p * d.gd;
  return {t1, seconds(in, shannon(in, rx2, d.beta_s))};
}

// Zero (a silent transmitter) followed by the dBm grid up to p_max.
std::vector<double> grid_of(double p_max, double step_db, double floor_dbm) {
  const double top = 10.0 * std::log10(p_max * 1000.0);
  std::vector<double> g{0.0};
  for (int i = 0;; ++i) {
    const double dbm = floor_dbm + i * step_db;
    if (dbm > top + 1e-9) break;
    g.push_back(std::pow(10.0, (dbm - 30.0) / 10.0));
  }
  if (g.back() < p_max * (1 - 1e-12)) g.push_back(p_max);
  return g;
}

}  // namespace

int TinyInstance::variables() const {
  int v = 0;
  for (const auto& d : devices) v += d.two_hop ? 2 : 1;
  return v;
}

bool feasible(const TinyInstance& in, const std::vector<double>& p_dev,
              const std::vector<double>& p_relay) {
  const bool fdma = is_fdma(in.mode);
  double total = 0.0;
  for (std::size_t n = 0; n < in.devices.size(); ++n) {
    const auto [a, b] = device_times(in, in.devices[n], p_dev[n], p_relay[n]);
    if (!fdma) {
      total += a + b;
      continue;
    }
    if (in.mode == Mode::df_fdma && in.devices[n].two_hop) {
      // Some alpha in [a / T', 1 - alpha_p - (b + t_p) / T'] must exist.
      if (a + b + in.processing_time > (1.0 - in.processing_fraction) * in.t_prime) return false;
    } else if (a > in.t_prime) {
      return false;
    }
  }
  return fdma || total <= in.t_prime;
}

OracleResult brute_force_oracle(const TinyInstance& in, double step_db, double floor_dbm) {
  const int vars = in.variables();
  if (vars < 1 || vars > 3) throw std::invalid_argument("oracle: needs 1 to 3 power variables");
  const std::vector<double> grid = grid_of(in.p_max, step_db, floor_dbm);
  const int top = static_cast<int>(grid.size()) - 1;

  // Variable slots: (device, is_relay).
  std::vector<std::pair<std::size_t, bool>> slots;
  for (std::size_t n = 0; n < in.devices.size(); ++n) {
    slots.emplace_back(n, false);
    if (in.devices[n].two_hop) slots.emplace_back(n, true);
  }
  std::vector<double> p_dev(in.devices.size(), 0.0);
  std::vector<double> p_relay(in.devices.size(), 0.0);
  std::vector<int> idx(3, 0);

  OracleResult best;
  best.total_w = kInf;
  const auto check = [&](const std::vector<int>& at) {
    for (int v = 0; v < vars; ++v) {
      const auto [n, relay] = slots[v];
      (relay ? p_relay : p_dev)[n] = grid[at[v]];
    }
    ++best.evaluations;
    return feasible(in, p_dev, p_relay);
  };
  const auto record = [&](const std::vector<int>& at) {
    double sum = 0.0;
    for (int v = 0; v < vars; ++v) sum += grid[at[v]];
    if (sum < best.total_w) {
      best.total_w = sum;
      best.feasible = true;
      best.p_dev = p_dev;
      best.p_relay = p_relay;
      best.at_floor = std::any_of(at.begin(), at.begin() + vars, [](int i) { return i == 1; });
    }
  };

  // The last variable is swept downwards while the one before it rises.
  // Points whose partial sum already exceeds the incumbent are skipped.
  const auto scan_pair = [&](std::vector<int>& at, int first, double base) {
    int j = top;
    at[first] = 0;
    at[first + 1] = top;
    for (int i = 0; i <= top; ++i) {
      if (base + grid[i] > best.total_w) break;
      at[first] = i;
      at[first + 1] = j;
      if (!check(at)) continue;
      while (j > 0) {
        at[first + 1] = j - 1;
        if (!check(at)) break;
        --j;
      }
      at[first + 1] = j;
      check(at);
      record(at);
    }
  };

  if (vars == 1) {
    int lo = 0;
    int hi = top;
    idx[0] = top;
    if (check(idx)) {
      while (lo < hi) {
        const int mid = (lo + hi) / 2;
        idx[0] = mid;
        if (check(idx)) {
          hi = mid;
        } else {
          lo = mid + 1;
        }
      }
      idx[0] = hi;
      check(idx);
      record(idx);
    }
  } else if (vars == 2) {
    scan_pair(idx, 0, 0.0);
  } else {
    for (int i = 0; i <= top; ++i) {
      if (grid[i] > best.total_w) break;
      idx[0] = i;
      scan_pair(idx, 1, grid[i]);
      idx[0] = i;
    }
  }
  if (!best.feasible) best.total_w = 0.0;
  return best;
}

double OracleSuite::max_abs_deviation_db() const {
  double m = 0.0;
  for (const auto& c : cases) m = std::max(m, std::abs(c.deviation_db));
  return m;
}

OracleSuite run_oracle_suite(Mode mode, int count, std::uint64_t seed) {
  OracleSuite suite;
  ScenarioConfig config;
  config.n_devices = 2;
  config.n_helpers = 1;
  config.ris_elements = mode == Mode::ris_tdma ? 4 : 0;
  config.p_max_w = dbm_to_watts(20.0);
  config.master_seed = seed;
  const int max_draws = 50 * count + 100;

  for (std::uint64_t draw = 0; static_cast<int>(suite.cases.size()) < count; ++draw) {
    if (static_cast<int>(draw) >= max_draws) {
      throw std::runtime_error("oracle suite: too many rejected draws");
    }
    // Payloads from 1 to 64 kbit spread the optima across the grid.
    config.payload_bits = std::round(1000.0 * std::pow(64.0, static_cast<double>(draw % 7) / 6.0));
    const Topology topo = sample_topology(config, draw);
    const ChannelSet ch = sample_channels(topo, config, draw);
    const ChannelGains& g = ch.estimate;

    Schedule schedule = mode == Mode::single_hop || mode == Mode::ris_tdma
                            ? all_direct(2)
                            : schedule_from_relays({-1, 0});
    std::vector<std::vector<cdouble>> phases;
    if (mode == Mode::ris_tdma) {
      for (std::size_t n = 0; n < 2; ++n) {
        phases.push_back(ris_phases_closed_form(g.direct[n], g.cascade_of(n)));
      }
    }
    if (!feasible_at_pmax(mode, schedule, g, config, phases)) {
      ++suite.rejected;
      continue;
    }
    const SolveReport rep = minimize_power(mode, schedule, g, config, phases);
    if (rep.status != SolveStatus::optimal && rep.status != SolveStatus::max_iter) {
      ++suite.rejected;
      continue;
    }

    TinyInstance in;
    in.mode = mode;
    in.bits = config.payload_bits;
    in.t_prime = budget_of(config).t_prime;
    in.theta = budget_of(config).theta;
    in.bandwidth = config.bandwidth_hz;
    in.noise = config.noise_power_w();
    in.p_max = config.p_max_w;
    in.processing_fraction = config.processing_fraction;
    in.processing_time = config.processing_time_s;
    for (std::size_t n = 0; n < 2; ++n) {
      TinyDevice d;
      d.two_hop = schedule.is_two_hop(n);
      if (mode == Mode::ris_tdma) {
        cdouble h = g.direct[n];
        const auto u = g.cascade_of(n);
        for (std::size_t q = 0; q < u.size(); ++q) h += std::conj(u[q]) * phases[n][q];
        d.gd = std::norm(h);
      } else {
        d.gd = g.direct_gain(n);
      }
      if (d.two_hop) {
        d.gs = g.access_gain(n, 0);
        d.ga = g.backhaul_gain(0);
      }
      if (is_fdma(mode)) {
        d.beta = rep.allocation.beta[n];
        d.beta_s = d.two_hop ? rep.allocation.beta_s[n] : 0.0;
      }
      in.devices.push_back(d);
    }
    const OracleResult o = brute_force_oracle(in);
    if (!o.feasible || o.at_floor) {
      ++suite.rejected;
      continue;
    }
    OracleCase c;
    c.mode = mode;
    c.index = draw;
    c.spca_w = rep.objective_watts;
    c.oracle_w = o.total_w;
    c.deviation_db = 10.0 * std::log10(c.spca_w / c.oracle_w);
    c.spca_feasible = feasible(in, rep.allocation.p_dev, rep.allocation.p_relay);
    suite.cases.push_back(c);
  }
  return suite;
}

}  // namespace iiotcoop::oracle
