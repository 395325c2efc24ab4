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
#include <cstdint>
#include <initializer_list>
#include <random>

namespace iiotcoop {

/// Independent random streams of a trial. Each physical entity draws from its
/// own stream, so adding a helper or a device never perturbs the draws of the
/// others, and paired comparisons across modes see identical channels.
enum class Stream : std::uint64_t {
  pap_position = 1,
  helper_position,
  device_position,
  direct_fading,
  access_fading,
  backhaul_fading,
  ris_device_fading,
  ris_ap_fading,
  direct_estimate,
  access_estimate,
  backhaul_estimate,
  cascade_estimate,
  classification,
  ris_phases,
};

/// Order-sensitive 64-bit hash built on the splitmix64 finalizer.
std::uint64_t stable_hash(std::initializer_list<std::uint64_t> words);

/// Engine for one stream of one trial; `a` and `b` index the entity.
std::mt19937_64 make_engine(std::uint64_t master_seed, std::uint64_t trial_index, Stream stream,
                            std::uint64_t a = 0, std::uint64_t b = 0);

/// Circularly symmetric complex Gaussian with E|z|^2 = variance.
std::complex<double> complex_gaussian(std::mt19937_64& engine, double variance = 1.0);

}  // namespace iiotcoop
