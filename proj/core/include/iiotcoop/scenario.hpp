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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "iiotcoop/config.hpp"

namespace iiotcoop {

using cdouble = std::complex<double>;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(Point a, Point b);

struct Topology {
  Point pap;
  std::vector<Point> helpers;
  std::vector<Point> devices;
};

/// Complex gains of one view (true or estimated) of every link class.
///
/// Layouts are row-major: access is N x K, ris_device / cascade are
/// N x K x J, ris_ap is K x J. Relay scenarios leave the RIS arrays empty and
/// RIS scenarios leave access / backhaul empty.
struct ChannelGains {
  std::size_t devices = 0;
  std::size_t helpers = 0;
  std::size_t elements = 0;

  std::vector<cdouble> direct;      // device -> pAP
  std::vector<cdouble> access;      // device -> sAP
  std::vector<cdouble> backhaul;    // sAP -> pAP
  std::vector<cdouble> ris_device;  // device -> RIS element
  std::vector<cdouble> ris_ap;      // RIS element -> pAP
  std::vector<cdouble> cascade;     // per-element cascaded channel

  [[nodiscard]] bool has_relays() const { return !backhaul.empty(); }
  [[nodiscard]] std::size_t total_elements() const { return helpers * elements; }

  [[nodiscard]] double direct_gain(std::size_t n) const { return std::norm(direct[n]); }
  [[nodiscard]] double access_gain(std::size_t n, std::size_t k) const {
    return std::norm(access[n * helpers + k]);
  }
  [[nodiscard]] double backhaul_gain(std::size_t k) const { return std::norm(backhaul[k]); }

  /// Stacked cascaded channel of device n across all RISs (length Q = K*J).
  [[nodiscard]] std::span<const cdouble> cascade_of(std::size_t n) const {
    const std::size_t q = total_elements();
    return std::span<const cdouble>(cascade).subspan(n * q, q);
  }
};

/// Large-scale (path loss plus shadowing) power gains per link.
struct LargeScaleGains {
  std::vector<double> direct;    // N
  std::vector<double> access;    // N x K
  std::vector<double> backhaul;  // K
  std::vector<double> ris_device;  // N x K
  std::vector<double> ris_ap;      // K
  std::vector<double> cascade;     // N x K, includes the RIS element gain
};

/// Estimation-error variance of the normalised small-scale fading per link.
struct ErrorVariances {
  std::vector<double> direct;    // N
  std::vector<double> access;    // N x K
  std::vector<double> backhaul;  // K
  std::vector<double> cascade;   // N x K (shared by the J elements)
};

struct ChannelSet {
  ChannelGains truth;
  ChannelGains estimate;
  LargeScaleGains large_scale;
  ErrorVariances sigma_e;
};

/// Uniform positions of pAP, helpers and devices in the square area.
Topology sample_topology(const ScenarioConfig& config, std::uint64_t trial_index);

/// Minimum link distance used by the path-loss model.
inline constexpr double kMinDistanceM = 0.1;
/// Reference distance of the log-distance model.
inline constexpr double kReferenceDistanceM = 1.0;

/// Log-distance path loss PL0 + 10 n log10(d / d0) with free-space PL0 at d0.
double path_loss_db(double distance_m, double carrier_hz, double exponent = 2.6);

/// Fading draws for every link, scaled by path gain with log-normal
/// shadowing. Estimates equal the truth (perfect CSI).
ChannelSet sample_channels(const Topology& topology, const ScenarioConfig& config,
                           std::uint64_t trial_index);

/// u_j = conj(h_dev_j) * h_ap_j. Throws std::invalid_argument on length
/// mismatch.
std::vector<cdouble> cascaded_channel(std::span<const cdouble> h_dev_ris,
                                      std::span<const cdouble> h_ris_ap);

/// 1 / (1 + L * snr).
double estimation_error_variance(double pilots, double snr);

/// Replaces the estimates in `channels` by MMSE estimates consistent with
/// the pilot budget: true = estimate + error, estimate ~ CN(0, 1 - sigma_e),
/// error ~ CN(0, sigma_e) in normalised units. The true channels are kept.
ChannelSet apply_estimation_error(ChannelSet channels, const ScenarioConfig& config,
                                  std::uint64_t trial_index);

struct TrainingBudget {
  double t_prime_s = 0.0;   // time left for uplink data
  double training_s = 0.0;  // pilot time of all devices
};

/// Pilot overhead subtracted from the cycle. Throws ConfigError when the
/// training does not fit in the cycle.
TrainingBudget training_budget(const ScenarioConfig& config);

}  // namespace iiotcoop
