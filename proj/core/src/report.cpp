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

#include "iiotcoop/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#ifndef IIOTCOOP_VERSION
#define IIOTCOOP_VERSION "0.0.0"
#endif

namespace iiotcoop {
namespace {

using nlohmann::ordered_json;

ordered_json rate_json(const RateEstimate& r) {
  ordered_json j;
  j["count"] = r.count;
  j["trials"] = r.trials;
  j["rate"] = r.rate ? ordered_json(*r.rate) : ordered_json(nullptr);
  j["upper_bound"] = r.upper_bound;
  j["display"] = r.display();
  return j;
}

ordered_json finite_or_null(double v) { return std::isfinite(v) ? ordered_json(v) : nullptr; }

ordered_json config_json(const ScenarioConfig& c) {
  ordered_json j;
  j["area_m"] = c.area_side_m;
  j["n_devices"] = c.n_devices;
  j["n_helpers"] = c.n_helpers;
  j["ris_elements"] = c.ris_elements;
  j["payload_bits"] = c.payload_bits;
  j["cycle_s"] = c.cycle_time_s;
  j["bandwidth_hz"] = c.bandwidth_hz;
  j["carrier_hz"] = c.carrier_hz;
  j["pmax_w"] = c.p_max_w;
  j["pmax_dbm"] = watts_to_dbm(c.p_max_w);
  j["noise_psd_w_hz"] = c.noise_psd_w_hz;
  j["shadow_std_db"] = c.shadow_std_db;
  j["rician_k"] = std::isinf(c.rician_k) ? ordered_json("inf") : ordered_json(c.rician_k);
  j["theta"] = c.theta;
  j["pilots"] = c.pilots;
  j["csi"] = to_string(c.csi);
  j["seed"] = c.master_seed;
  j["processing_fraction"] = c.processing_fraction;
  j["processing_time_s"] = c.processing_time_s;
  j["path_loss_exponent"] = c.path_loss_exponent;
  j["ris_element_gain_db"] = c.ris_element_gain_db;
  return j;
}

}  // namespace

std::string_view library_version() { return IIOTCOOP_VERSION; }

void write_trials_csv(std::ostream& out, const std::vector<TrialOutcome>& outcomes) {
  out << kTrialCsvHeader << '\n';
  char power[40];
  for (const auto& o : outcomes) {
    std::snprintf(power, sizeof power, "%.6f", o.total_power_dbm);
    out << o.trial_index << ',' << to_string(o.mode) << ',' << o.n1h << ',' << o.n2h << ','
        << power << ',' << (o.feasible ? 1 : 0) << ',' << (o.overflow ? 1 : 0) << ','
        << (o.outage ? 1 : 0) << ',' << o.iterations << '\n';
  }
}

std::string trials_csv(const std::vector<TrialOutcome>& outcomes) {
  std::ostringstream out;
  write_trials_csv(out, outcomes);
  return out.str();
}

std::string summary_json(const std::vector<SummaryEntry>& entries) {
  ordered_json doc;
  doc["version"] = library_version();
  ordered_json runs = ordered_json::array();
  for (const auto& e : entries) {
    const MetricsSummary& s = e.summary;
    ordered_json r;
    r["label"] = e.label;
    r["mode"] = to_string(s.mode);
    if (e.sweep_param) r["sweep"] = {{"param", *e.sweep_param}, {"value", *e.sweep_value}};
    r["trials"] = s.trial_count;
    r["feasible"] = s.feasible_count;
    r["rates"] = {{"overflow", rate_json(s.overflow)}, {"outage", rate_json(s.outage)}};
    r["percentiles_dbm"] = {{"p5", finite_or_null(s.p5_dbm)},
                            {"p50", finite_or_null(s.p50_dbm)},
                            {"p95", finite_or_null(s.p95_dbm)}};
    r["mean_iterations"] = s.mean_iterations;
    r["recheck_failures"] = s.recheck_failures;
    r["solver_failures"] = s.solver_failures;
    ordered_json cdf = ordered_json::array();
    for (const auto& [x, p] : s.cdf_points) cdf.push_back({x, p});
    r["cdf"] = std::move(cdf);
    r["config"] = config_json(e.config);
    runs.push_back(std::move(r));
  }
  doc["runs"] = std::move(runs);
  return doc.dump(2) + "\n";
}

}  // namespace iiotcoop
