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
#include <numbers>
#include <random>

#include "iiotcoop/protocol.hpp"
#include "iiotcoop/ris_phases.hpp"

namespace iiotcoop {
namespace {

std::vector<cdouble> random_vector(std::mt19937_64& rng, std::size_t q, double scale) {
  std::normal_distribution<double> g(0.0, scale);
  std::vector<cdouble> u(q);
  for (auto& x : u) x = {g(rng), g(rng)};
  return u;
}

TEST(RisClosedForm, ReachesTriangleBound) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t q = 1 + i % 64;
    const cdouble h_d = random_vector(rng, 1, 1.0)[0];
    const auto u = random_vector(rng, q, 0.3);
    const auto v = ris_phases_closed_form(h_d, u);
    double bound = std::abs(h_d);
    for (const auto& x : u) bound += std::abs(x);
    for (const auto& x : v) ASSERT_NEAR(std::abs(x), 1.0, 1e-15);
    ASSERT_NEAR(std::abs(ris_effective_channel(h_d, u, v)), bound, 1e-12 * bound);
  }
}

TEST(RisSca, MonotoneAndConvergesToClosedForm) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 500; ++i) {
    const std::size_t q = 1 + i % 32;
    const cdouble h_d = random_vector(rng, 1, 1.0)[0];
    const auto u = random_vector(rng, q, 0.5);
    std::vector<cdouble> v0(q, {1.0, 0.0});
    // A weak direct path slows the phase rotation, so allow a long run.
    const PhaseResult r = ris_phases_sca(h_d, u, v0, 1e-12, 100000);
    ASSERT_TRUE(r.converged);
    for (std::size_t t = 1; t < r.gain_trace.size(); ++t) {
      ASSERT_GE(r.gain_trace[t], r.gain_trace[t - 1]);
    }
    double bound = std::abs(h_d);
    for (const auto& x : u) bound += std::abs(x);
    EXPECT_NEAR(r.gain_trace.back(), bound, 1e-9 * bound);
  }
}

TEST(RisClosedForm, BeatsEveryGridPoint) {
  // Exhaustive 16-level phase grid for up to three elements.
  std::mt19937_64 rng(3);
  constexpr int kLevels = 16;
  for (int i = 0; i < 60; ++i) {
    const std::size_t q = 1 + i % 3;
    const cdouble h_d = random_vector(rng, 1, 1.0)[0];
    const auto u = random_vector(rng, q, 1.0);
    const double best = std::abs(ris_effective_channel(h_d, u, ris_phases_closed_form(h_d, u)));
    std::size_t combos = 1;
    for (std::size_t j = 0; j < q; ++j) combos *= kLevels;
    double grid_best = 0.0;
    std::vector<cdouble> v(q);
    for (std::size_t code = 0; code < combos; ++code) {
      std::size_t rest = code;
      for (std::size_t j = 0; j < q; ++j) {
        v[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(rest % kLevels) / kLevels);
        rest /= kLevels;
      }
      grid_best = std::max(grid_best, std::abs(ris_effective_channel(h_d, u, v)));
    }
    EXPECT_GE(best, grid_best - 1e-12);
    // The grid is within cos(pi/16) of the optimum per element.
    EXPECT_GE(grid_best, best * std::cos(std::numbers::pi / kLevels) - 1e-12);
  }
}

TEST(RisRandom, UnitModulusAndReproducible) {
  const auto a = ris_phases_random(64, 9, 3, 2);
  const auto b = ris_phases_random(64, 9, 3, 2);
  const auto c = ris_phases_random(64, 9, 3, 1);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  for (const auto& x : a) EXPECT_NEAR(std::abs(x), 1.0, 1e-15);
}

TEST(RisSca, ZeroCascadeKeepsInitialPhases) {
  const std::vector<cdouble> u{{0.0, 0.0}, {0.0, 0.0}};
  const std::vector<cdouble> v0{{0.0, 1.0}, {-1.0, 0.0}};
  const PhaseResult r = ris_phases_sca({0.5, 0.5}, u, v0);
  EXPECT_EQ(r.v, v0);
  EXPECT_TRUE(r.converged);
}

}  // namespace
}  // namespace iiotcoop
