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

#include <benchmark/benchmark.h>

#include <random>

#include "iiotcoop/campaign.hpp"
#include "iiotcoop/envelope.hpp"
#include "iiotcoop/presets.hpp"
#include "iiotcoop/protocol.hpp"
#include "iiotcoop/ris_phases.hpp"

namespace {

using namespace iiotcoop;

ScenarioConfig bench_config(int helpers, int elements = 0) {
  ScenarioConfig c = reference_config();
  c.payload_bits = 256;
  c.p_max_w = dbm_to_watts(20.0);
  c.n_helpers = helpers;
  c.ris_elements = elements;
  if (elements > 0) c.pilots = elements + 1;
  return c;
}

void BM_ChannelDraw(benchmark::State& state) {
  const ScenarioConfig c = bench_config(4);
  std::uint64_t trial = 0;
  for (auto _ : state) {
    const Topology t = sample_topology(c, trial);
    benchmark::DoNotOptimize(sample_channels(t, c, trial++));
  }
}
BENCHMARK(BM_ChannelDraw);

void BM_Trial(benchmark::State& state) {
  const auto mode = static_cast<Mode>(state.range(0));
  const ScenarioConfig c =
      mode == Mode::ris_tdma ? bench_config(1, 16) : bench_config(mode == Mode::single_hop ? 0 : 4);
  std::uint64_t trial = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_trial(c, mode, trial++));
  state.SetLabel(std::string(to_string(mode)));
}
BENCHMARK(BM_Trial)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_ScreenOnlyTrial(benchmark::State& state) {
  const ScenarioConfig c = bench_config(4);
  TrialOptions opt;
  opt.optimize = false;
  std::uint64_t trial = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_trial(c, Mode::df_tdma, trial++, opt));
}
BENCHMARK(BM_ScreenOnlyTrial)->Unit(benchmark::kMicrosecond);

void BM_RisPhasesSca(benchmark::State& state) {
  const auto q = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  std::vector<cdouble> u(q);
  for (auto& x : u) x = {g(rng), g(rng)};
  const auto v0 = ris_phases_random(q, 1, 0, 0);
  for (auto _ : state) benchmark::DoNotOptimize(ris_phases_sca({0.3, 0.1}, u, v0));
}
BENCHMARK(BM_RisPhasesSca)->RangeMultiplier(4)->Range(16, 256);

void BM_Envelope(benchmark::State& state) {
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta_lower(x, 1.7, 0.5, 2.0) + theta_upper(x, 1.7, 0.5, 2.0));
    x += 1e-9;
  }
}
BENCHMARK(BM_Envelope);

}  // namespace

BENCHMARK_MAIN();
