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

#include "iiotcoop/rng.hpp"

#include <cmath>

namespace iiotcoop {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t stable_hash(std::initializer_list<std::uint64_t> words) {
  std::uint64_t h = 0x6a09e667f3bcc908ULL;
  for (std::uint64_t w : words) h = splitmix64(h ^ splitmix64(w));
  return h;
}

std::mt19937_64 make_engine(std::uint64_t master_seed, std::uint64_t trial_index, Stream stream,
                            std::uint64_t a, std::uint64_t b) {
  return std::mt19937_64(
      stable_hash({master_seed, trial_index, static_cast<std::uint64_t>(stream), a, b}));
}

std::complex<double> complex_gaussian(std::mt19937_64& engine, double variance) {
  // Box-Muller on two uniforms; avoids the caching state of
  // std::normal_distribution so each call consumes exactly two draws.
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double u1 = 1.0 - uniform(engine);  // (0, 1]
  const double u2 = uniform(engine);
  const double radius = std::sqrt(-variance * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace iiotcoop
