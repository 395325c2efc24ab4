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

#include <sstream>

#include "iiotcoop/report.hpp"
#include "json.hpp"

namespace iiotcoop {
namespace {

TEST(TrialsCsv, HeaderIsFrozen) {
  EXPECT_EQ(kTrialCsvHeader,
            "trial,mode,n1h,n2h,total_power_dbm,feasible,overflow,outage,iterations");
  EXPECT_EQ(trials_csv({}), std::string(kTrialCsvHeader) + "\n");
}

TEST(TrialsCsv, RowFormat) {
  TrialOutcome o;
  o.trial_index = 7;
  o.mode = Mode::af_fdma;
  o.n1h = 6;
  o.n2h = 4;
  o.total_power_dbm = -31.25;
  o.feasible = true;
  o.outage = true;
  o.iterations = 12;
  const std::string csv = trials_csv({o});
  EXPECT_EQ(csv.substr(csv.find('\n') + 1), "7,af-fdma,6,4,-31.250000,1,0,1,12\n");
  std::ostringstream out;
  write_trials_csv(out, {o});
  EXPECT_EQ(out.str(), csv);
}

TEST(SummaryJson, CarriesRatesPercentilesAndConfig) {
  SummaryEntry e;
  e.label = "1of4";
  e.config.n_helpers = 4;
  std::vector<TrialOutcome> outs(3);
  outs[0].total_power_dbm = -30.0;
  outs[1].total_power_dbm = -20.0;
  outs[2].overflow = true;
  e.summary = summarize(Mode::df_tdma, outs);
  e.sweep_param = "theta";
  e.sweep_value = 0.7;
  const auto doc = nlohmann::json::parse(summary_json({e}));
  EXPECT_EQ(doc["version"], std::string(library_version()));
  const auto& r = doc["runs"][0];
  EXPECT_EQ(r["label"], "1of4");
  EXPECT_EQ(r["mode"], "df-tdma");
  EXPECT_EQ(r["trials"], 3);
  EXPECT_EQ(r["sweep"]["param"], "theta");
  EXPECT_DOUBLE_EQ(r["sweep"]["value"].get<double>(), 0.7);
  EXPECT_EQ(r["rates"]["overflow"]["count"], 1);
  EXPECT_EQ(r["rates"]["outage"]["display"], "< 1/3");
  EXPECT_TRUE(r["rates"]["outage"]["rate"].is_null());
  EXPECT_DOUBLE_EQ(r["percentiles_dbm"]["p50"].get<double>(), -25.0);
  EXPECT_EQ(r["cdf"].size(), 2u);
  EXPECT_EQ(r["config"]["n_helpers"], 4);
  EXPECT_EQ(r["config"]["csi"], "perfect");
}

TEST(SummaryJson, AllOverflowGivesNullPercentiles) {
  SummaryEntry e;
  std::vector<TrialOutcome> outs(2);
  for (auto& o : outs) o.overflow = true;
  e.summary = summarize(Mode::single_hop, outs);
  const auto doc = nlohmann::json::parse(summary_json({e}));
  EXPECT_TRUE(doc["runs"][0]["percentiles_dbm"]["p50"].is_null());
  EXPECT_FALSE(doc["runs"][0].contains("sweep"));
}

}  // namespace
}  // namespace iiotcoop
