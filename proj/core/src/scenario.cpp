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

#include "iiotcoop/scenario.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "iiotcoop/rng.hpp"

namespace iiotcoop {
namespace {

constexpr double kSpeedOfLight = 299792458.0;

Point uniform_point(std::mt19937_64& engine, double side) {
  std::uniform_real_distribution<double> coord(0.0, side);
  const double x = coord(engine);
  const double y = coord(engine);
  return {x, y};
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// Linear large-scale power gain of one link; consumes one normal draw.
double large_scale_gain(std::mt19937_64& engine, double d, const ScenarioConfig& config) {
  std::normal_distribution<double> standard(0.0, 1.0);
  const double shadow_db = config.shadow_std_db * standard(engine);
  return db_to_linear(-(path_loss_db(d, config.carrier_hz, config.path_loss_exponent) + shadow_db));
}

cdouble rician(std::mt19937_64& engine, double k_factor) {
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  const cdouble los = std::polar(1.0, phase(engine));
  if (std::isinf(k_factor)) return los;
  const cdouble scatter = complex_gaussian(engine);
  return std::sqrt(k_factor / (k_factor + 1.0)) * los + std::sqrt(1.0 / (k_factor + 1.0)) * scatter;
}

// MMSE estimate of h given the true channel; the error h - estimate has
// variance sigma_e * gain and is independent of the estimate.
cdouble mmse_estimate(std::mt19937_64& engine, cdouble truth, double sigma_e, double gain) {
  const cdouble w = complex_gaussian(engine);
  return (1.0 - sigma_e) * truth + std::sqrt(sigma_e * (1.0 - sigma_e) * gain) * w;
}

}  // namespace

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

Topology sample_topology(const ScenarioConfig& config, std::uint64_t trial_index) {
  config.validate();
  const std::uint64_t seed = config.master_seed;
  Topology topo;
  auto pap_engine = make_engine(seed, trial_index, Stream::pap_position);
  topo.pap = uniform_point(pap_engine, config.area_side_m);
  topo.helpers.reserve(config.n_helpers);
  for (int k = 0; k < config.n_helpers; ++k) {
    auto engine = make_engine(seed, trial_index, Stream::helper_position, k);
    topo.helpers.push_back(uniform_point(engine, config.area_side_m));
  }
  topo.devices.reserve(config.n_devices);
  for (int n = 0; n < config.n_devices; ++n) {
    auto engine = make_engine(seed, trial_index, Stream::device_position, n);
    topo.devices.push_back(uniform_point(engine, config.area_side_m));
  }
  return topo;
}

double path_loss_db(double distance_m, double carrier_hz, double exponent) {
  const double d = std::max(distance_m, kMinDistanceM);
  const double pl0 =
      20.0 * std::log10(4.0 * std::numbers::pi * kReferenceDistanceM * carrier_hz / kSpeedOfLight);
  return pl0 + 10.0 * exponent * std::log10(d / kReferenceDistanceM);
}

ChannelSet sample_channels(const Topology& topology, const ScenarioConfig& config,
                           std::uint64_t trial_index) {
  const std::size_t n_dev = topology.devices.size();
  const std::size_t n_help = topology.helpers.size();
  const bool ris = config.uses_ris();
  const std::size_t n_el = ris ? static_cast<std::size_t>(config.ris_elements) : 0;
  const std::uint64_t seed = config.master_seed;

  ChannelSet set;
  ChannelGains& g = set.truth;
  g.devices = n_dev;
  g.helpers = n_help;
  g.elements = n_el;
  LargeScaleGains& ls = set.large_scale;

  g.direct.resize(n_dev);
  ls.direct.resize(n_dev);
  for (std::size_t n = 0; n < n_dev; ++n) {
    auto engine = make_engine(seed, trial_index, Stream::direct_fading, n);
    ls.direct[n] = large_scale_gain(engine, distance(topology.devices[n], topology.pap), config);
    g.direct[n] = std::sqrt(ls.direct[n]) * complex_gaussian(engine);
  }

  if (!ris) {
    g.access.resize(n_dev * n_help);
    ls.access.resize(n_dev * n_help);
    for (std::size_t n = 0; n < n_dev; ++n) {
      for (std::size_t k = 0; k < n_help; ++k) {
        auto engine = make_engine(seed, trial_index, Stream::access_fading, n, k);
        const double gain =
            large_scale_gain(engine, distance(topology.devices[n], topology.helpers[k]), config);
        ls.access[n * n_help + k] = gain;
        g.access[n * n_help + k] = std::sqrt(gain) * complex_gaussian(engine);
      }
    }
    g.backhaul.resize(n_help);
    ls.backhaul.resize(n_help);
    for (std::size_t k = 0; k < n_help; ++k) {
      auto engine = make_engine(seed, trial_index, Stream::backhaul_fading, k);
      ls.backhaul[k] = large_scale_gain(engine, distance(topology.helpers[k], topology.pap), config);
      g.backhaul[k] = std::sqrt(ls.backhaul[k]) * rician(engine, config.rician_k);
    }
  } else {
    const double element_gain = db_to_linear(config.ris_element_gain_db);
    g.ris_ap.resize(n_help * n_el);
    ls.ris_ap.resize(n_help);
    for (std::size_t k = 0; k < n_help; ++k) {
      auto engine = make_engine(seed, trial_index, Stream::ris_ap_fading, k);
      ls.ris_ap[k] = large_scale_gain(engine, distance(topology.helpers[k], topology.pap), config);
      const double amp = std::sqrt(ls.ris_ap[k] * element_gain);
      for (std::size_t j = 0; j < n_el; ++j) g.ris_ap[k * n_el + j] = amp * complex_gaussian(engine);
    }
    g.ris_device.resize(n_dev * n_help * n_el);
    g.cascade.resize(n_dev * n_help * n_el);
    ls.ris_device.resize(n_dev * n_help);
    ls.cascade.resize(n_dev * n_help);
    for (std::size_t n = 0; n < n_dev; ++n) {
      for (std::size_t k = 0; k < n_help; ++k) {
        auto engine = make_engine(seed, trial_index, Stream::ris_device_fading, n, k);
        const double gain =
            large_scale_gain(engine, distance(topology.devices[n], topology.helpers[k]), config);
        ls.ris_device[n * n_help + k] = gain;
        ls.cascade[n * n_help + k] = gain * ls.ris_ap[k] * element_gain;
        const std::size_t base = (n * n_help + k) * n_el;
        for (std::size_t j = 0; j < n_el; ++j) {
          g.ris_device[base + j] = std::sqrt(gain) * complex_gaussian(engine);
        }
        const auto u = cascaded_channel(
            std::span<const cdouble>(g.ris_device).subspan(base, n_el),
            std::span<const cdouble>(g.ris_ap).subspan(k * n_el, n_el));
        std::copy(u.begin(), u.end(), g.cascade.begin() + static_cast<std::ptrdiff_t>(base));
      }
    }
  }

  set.estimate = set.truth;
  set.sigma_e.direct.assign(n_dev, 0.0);
  set.sigma_e.access.assign(g.access.size(), 0.0);
  set.sigma_e.backhaul.assign(g.backhaul.size(), 0.0);
  set.sigma_e.cascade.assign(ls.cascade.size(), 0.0);
  return set;
}

std::vector<cdouble> cascaded_channel(std::span<const cdouble> h_dev_ris,
                                      std::span<const cdouble> h_ris_ap) {
  if (h_dev_ris.size() != h_ris_ap.size()) {
    throw std::invalid_argument("cascaded_channel: length mismatch");
  }
  std::vector<cdouble> u(h_dev_ris.size());
  for (std::size_t j = 0; j < u.size(); ++j) u[j] = std::conj(h_dev_ris[j]) * h_ris_ap[j];
  return u;
}

double estimation_error_variance(double pilots, double snr) {
  if (std::isinf(snr)) return pilots > 0 ? 0.0 : 1.0;
  return 1.0 / (1.0 + pilots * snr);
}

ChannelSet apply_estimation_error(ChannelSet channels, const ScenarioConfig& config,
                                  std::uint64_t trial_index) {
  const ChannelGains& truth = channels.truth;
  ChannelGains& est = channels.estimate;
  const LargeScaleGains& ls = channels.large_scale;
  ErrorVariances& var = channels.sigma_e;
  const std::uint64_t seed = config.master_seed;
  const double pilots = config.pilots;
  const double snr_scale = config.p_max_w / config.noise_power_w();
  const std::size_t n_dev = truth.devices;
  const std::size_t n_help = truth.helpers;

  for (std::size_t n = 0; n < n_dev; ++n) {
    auto engine = make_engine(seed, trial_index, Stream::direct_estimate, n);
    var.direct[n] = estimation_error_variance(pilots, snr_scale * ls.direct[n]);
    est.direct[n] = mmse_estimate(engine, truth.direct[n], var.direct[n], ls.direct[n]);
  }
  if (truth.has_relays()) {
    for (std::size_t n = 0; n < n_dev; ++n) {
      for (std::size_t k = 0; k < n_help; ++k) {
        const std::size_t i = n * n_help + k;
        auto engine = make_engine(seed, trial_index, Stream::access_estimate, n, k);
        var.access[i] = estimation_error_variance(pilots, snr_scale * ls.access[i]);
        est.access[i] = mmse_estimate(engine, truth.access[i], var.access[i], ls.access[i]);
      }
    }
    for (std::size_t k = 0; k < n_help; ++k) {
      auto engine = make_engine(seed, trial_index, Stream::backhaul_estimate, k);
      var.backhaul[k] = estimation_error_variance(pilots, snr_scale * ls.backhaul[k]);
      est.backhaul[k] = mmse_estimate(engine, truth.backhaul[k], var.backhaul[k], ls.backhaul[k]);
    }
  }
  const std::size_t n_el = truth.elements;
  if (n_el > 0) {
    for (std::size_t n = 0; n < n_dev; ++n) {
      for (std::size_t k = 0; k < n_help; ++k) {
        const std::size_t i = n * n_help + k;
        auto engine = make_engine(seed, trial_index, Stream::cascade_estimate, n, k);
        var.cascade[i] = estimation_error_variance(pilots, snr_scale * ls.cascade[i]);
        for (std::size_t j = 0; j < n_el; ++j) {
          est.cascade[i * n_el + j] =
              mmse_estimate(engine, truth.cascade[i * n_el + j], var.cascade[i], ls.cascade[i]);
        }
      }
    }
  }
  return channels;
}

TrainingBudget training_budget(const ScenarioConfig& config) {
  TrainingBudget budget;
  if (config.csi == CsiMode::perfect) {
    budget.t_prime_s = config.cycle_time_s;
    return budget;
  }
  const double symbol_s = 1.0 / config.bandwidth_hz;
  double per_device = config.pilots * symbol_s;
  if (config.uses_ris() && config.n_helpers > 0) per_device *= config.n_helpers;
  budget.training_s = config.n_devices * per_device;
  budget.t_prime_s = config.cycle_time_s - budget.training_s;
  if (!(budget.t_prime_s > 0)) throw ConfigError("pilots: training exceeds cycle");
  return budget;
}

}  // namespace iiotcoop
