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

#include "iiotcoop/grid_oracle.hpp"

namespace iiotcoop::oracle {
namespace {

TinyInstance one_device(Mode mode) {
  TinyInstance in;
  in.mode = mode;
  in.bits = 256;
  in.t_prime = 1e-4;
  in.bandwidth = 100e6;
  in.noise = 3.98e-13;
  in.p_max = 0.1;
  in.processing_fraction = 0.05;
  TinyDevice d;
  d.gd = 1e-9;
  in.devices.push_back(d);
  return in;
}

TEST(GridOracle, SingleLinkNearClosedForm) {
  const TinyInstance in = one_device(Mode::single_hop);
  const OracleResult r = brute_force_oracle(in, 0.01);
  ASSERT_TRUE(r.feasible);
  const double exact = (std::exp2(in.bits / (in.bandwidth * in.t_prime)) - 1) * in.noise / 1e-9;
  // The grid rounds up by at most one step.
  EXPECT_GE(r.total_w, exact * (1 - 1e-12));
  EXPECT_LE(r.total_w, exact * std::pow(10.0, 0.01 / 10) * (1 + 1e-12));
  EXPECT_TRUE(feasible(in, r.p_dev, r.p_relay));
}

TEST(GridOracle, InfeasibleWhenPmaxTooLow) {
  TinyInstance in = one_device(Mode::single_hop);
  in.p_max = 1e-9;
  EXPECT_FALSE(brute_force_oracle(in).feasible);
}

TEST(GridOracle, RelayPathUsesBothPowers) {
  TinyInstance in = one_device(Mode::df_tdma);
  in.devices[0] = {true, 1e-14, 1e-8, 1e-7, 1.0, 1.0};
  const OracleResult r = brute_force_oracle(in);
  ASSERT_TRUE(r.feasible);
  EXPECT_GT(r.p_relay[0], 0.0);
  EXPECT_TRUE(feasible(in, r.p_dev, r.p_relay));
  // Dropping either power a step must break feasibility.
  auto lower = r.p_dev;
  lower[0] *= std::pow(10.0, -0.05 / 10);
  EXPECT_FALSE(feasible(in, lower, r.p_relay));
}

TEST(GridOracle, SuiteAgreesWithSpca) {
  for (Mode m : {Mode::single_hop, Mode::df_tdma, Mode::af_fdma}) {
    const OracleSuite s = run_oracle_suite(m, 4, 3);
    EXPECT_EQ(s.cases.size(), 4u);
    for (const auto& c : s.cases) EXPECT_TRUE(c.spca_feasible);
    EXPECT_LT(s.max_abs_deviation_db(), 0.1) << to_string(m);
  }
}

}  // namespace
}  // namespace iiotcoop::oracle
