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

#include <cstdint>
#include <vector>

#include "iiotcoop/config.hpp"

namespace iiotcoop::oracle {

/// One device of a tiny instance. Gains are |h|^2 and bandwidth fractions
/// are fixed (1 in TDMA modes).
struct TinyDevice {
  bool two_hop = false;
  double gd = 0.0;  // direct (or effective RIS) gain
  double gs = 0.0;  // device -> relay
  double ga = 0.0;  // relay -> pAP
  double beta = 1.0;
  double beta_s = 1.0;
};

struct TinyInstance {
  Mode mode = Mode::df_tdma;
  double bits = 0.0;
  double t_prime = 0.0;
  double theta = 1.0;
  double bandwidth = 0.0;
  double noise = 0.0;  // full-band noise power
  double p_max = 0.0;
  double processing_fraction = 0.0;
  double processing_time = 0.0;
  std::vector<TinyDevice> devices;

  [[nodiscard]] int variables() const;
};

/// Exact feasibility of given powers; the DF-FDMA time split is searched.
bool feasible(const TinyInstance& inst, const std::vector<double>& p_dev,
              const std::vector<double>& p_relay);

struct OracleResult {
  bool feasible = false;
  double total_w = 0.0;
  std::vector<double> p_dev;
  std::vector<double> p_relay;
  bool at_floor = false;  // some variable sits at the lowest nonzero grid point
  long evaluations = 0;
};

/// Exhaustive search over zero plus a dBm grid [floor_dbm, p_max] with
/// step_db spacing for at most three power variables. Feasibility is monotone in
/// every power, so one variable per grid line is found by a sweeping pointer.
OracleResult brute_force_oracle(const TinyInstance& inst, double step_db = 0.05,
                                double floor_dbm = -70.0);

/// SPCA versus grid on one random instance.
struct OracleCase {
  Mode mode = Mode::df_tdma;
  std::uint64_t index = 0;
  double spca_w = 0.0;
  double oracle_w = 0.0;
  double deviation_db = 0.0;  // 10 log10(spca / oracle)
  bool spca_feasible = false;  // SPCA powers pass the oracle's own check
};

struct OracleSuite {
  std::vector<OracleCase> cases;
  int rejected = 0;  // draws skipped for infeasibility or grid-floor optima
  [[nodiscard]] double max_abs_deviation_db() const;
};

/// Draws `count` usable two-device instances of `mode` (one direct and one
/// relayed device for relay modes, one RIS with four elements for ris-tdma)
/// and compares the library optimum with the grid oracle.
OracleSuite run_oracle_suite(Mode mode, int count, std::uint64_t seed);

}  // namespace iiotcoop::oracle
