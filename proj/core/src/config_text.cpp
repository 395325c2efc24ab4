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

#include "iiotcoop/config_text.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <utility>

namespace iiotcoop {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::string_view key, std::string_view what) {
  throw ConfigError(std::string(key) + ": " + std::string(what));
}

double to_number(std::string_view key, std::string_view text) {
  if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    fail(key, "not a number: '" + std::string(text) + "'");
  }
  return v;
}

int to_int(std::string_view key, std::string_view text) {
  int v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    fail(key, "not an integer: '" + std::string(text) + "'");
  }
  return v;
}

std::uint64_t to_u64(std::string_view key, std::string_view text) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    fail(key, "not an unsigned integer: '" + std::string(text) + "'");
  }
  return v;
}

std::string fmt(double v) {
  if (std::isinf(v)) return "inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Alternate {
  const char* primary;
  const char* alternate;
};

constexpr Alternate kAlternates[] = {
    {"payload_bytes", "payload_bits"},   {"cycle_ms", "cycle_s"},
    {"bandwidth_mhz", "bandwidth_hz"},   {"carrier_ghz", "carrier_hz"},
    {"pmax_dbm", "pmax_w"},              {"noise_psd_dbm_hz", "noise_psd_w_hz"},
};

constexpr const char* kKnownKeys[] = {
    "area_m",        "n_devices",        "n_helpers",        "ris_elements",
    "payload_bytes", "payload_bits",     "cycle_ms",         "cycle_s",
    "bandwidth_mhz", "bandwidth_hz",     "carrier_ghz",      "carrier_hz",
    "pmax_dbm",      "pmax_w",           "noise_psd_dbm_hz", "noise_psd_w_hz",
    "shadow_std_db", "rician_k",         "theta",            "pilots",
    "csi",           "seed",             "processing_fraction",
    "processing_time_s", "path_loss_exponent", "ris_element_gain_db",
    "sweep.param",   "sweep.values",
};

bool known(std::string_view key) {
  for (const char* k : kKnownKeys) {
    if (key == k) return true;
  }
  return false;
}

}  // namespace

ConfigFile parse_config_file(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!known(key)) fail(key, "unknown key");
    if (value.empty()) fail(key, "missing value");
    if (!kv.emplace(std::string(key), std::string(value)).second) fail(key, "duplicate key");
  }

  for (const auto& [a, b] : kAlternates) {
    if (kv.count(a) && kv.count(b)) {
      fail(a, std::string("conflicts with ") + b);
    }
  }
  const auto has = [&](std::string_view k) { return kv.find(k) != kv.end(); };
  const auto get = [&](std::string_view k) -> std::string_view { return kv.find(k)->second; };
  for (const char* req : {"n_devices", "n_helpers"}) {
    if (!has(req)) fail(req, "missing required key");
  }
  if (!has("payload_bytes") && !has("payload_bits")) fail("payload_bytes", "missing required key");
  if (!has("pmax_dbm") && !has("pmax_w")) fail("pmax_dbm", "missing required key");

  ConfigFile file;
  ScenarioConfig& c = file.scenario;
  const auto num = [&](std::string_view k) { return to_number(k, get(k)); };
  const auto range = [&](std::string_view k, bool ok, std::string_view what) {
    if (!ok) fail(k, std::string("out of range: ") + std::string(get(k)) + " (" +
                         std::string(what) + ")");
  };

  if (has("area_m")) {
    c.area_side_m = num("area_m");
    range("area_m", std::isfinite(c.area_side_m) && c.area_side_m > 0, "must be > 0");
  }
  c.n_devices = to_int("n_devices", get("n_devices"));
  range("n_devices", c.n_devices >= 1, "must be >= 1");
  c.n_helpers = to_int("n_helpers", get("n_helpers"));
  range("n_helpers", c.n_helpers >= 0, "must be >= 0");
  if (has("ris_elements")) {
    c.ris_elements = to_int("ris_elements", get("ris_elements"));
    range("ris_elements", c.ris_elements >= 0, "must be >= 0");
  }
  if (has("payload_bytes")) {
    const double bytes = num("payload_bytes");
    range("payload_bytes", std::isfinite(bytes) && bytes >= 0, "must be >= 0");
    c.payload_bits = 8.0 * bytes;
  } else {
    c.payload_bits = num("payload_bits");
    range("payload_bits", std::isfinite(c.payload_bits) && c.payload_bits >= 0, "must be >= 0");
  }
  if (has("cycle_ms")) {
    const double ms = num("cycle_ms");
    range("cycle_ms", std::isfinite(ms) && ms > 0, "must be > 0");
    c.cycle_time_s = ms * 1e-3;
  } else if (has("cycle_s")) {
    c.cycle_time_s = num("cycle_s");
    range("cycle_s", std::isfinite(c.cycle_time_s) && c.cycle_time_s > 0, "must be > 0");
  }
  if (has("bandwidth_mhz")) {
    const double mhz = num("bandwidth_mhz");
    range("bandwidth_mhz", std::isfinite(mhz) && mhz > 0, "must be > 0");
    c.bandwidth_hz = mhz * 1e6;
  } else if (has("bandwidth_hz")) {
    c.bandwidth_hz = num("bandwidth_hz");
    range("bandwidth_hz", std::isfinite(c.bandwidth_hz) && c.bandwidth_hz > 0, "must be > 0");
  }
  if (has("carrier_ghz")) {
    const double ghz = num("carrier_ghz");
    range("carrier_ghz", std::isfinite(ghz) && ghz > 0, "must be > 0");
    c.carrier_hz = ghz * 1e9;
  } else if (has("carrier_hz")) {
    c.carrier_hz = num("carrier_hz");
    range("carrier_hz", std::isfinite(c.carrier_hz) && c.carrier_hz > 0, "must be > 0");
  }
  if (has("pmax_dbm")) {
    const double dbm = num("pmax_dbm");
    range("pmax_dbm", std::isfinite(dbm), "must be finite");
    c.p_max_w = dbm_to_watts(dbm);
  } else {
    c.p_max_w = num("pmax_w");
    range("pmax_w", std::isfinite(c.p_max_w) && c.p_max_w > 0, "must be > 0");
  }
  if (has("noise_psd_dbm_hz")) {
    const double dbm = num("noise_psd_dbm_hz");
    range("noise_psd_dbm_hz", std::isfinite(dbm), "must be finite");
    c.noise_psd_w_hz = dbm_to_watts(dbm);
  } else if (has("noise_psd_w_hz")) {
    c.noise_psd_w_hz = num("noise_psd_w_hz");
    range("noise_psd_w_hz", std::isfinite(c.noise_psd_w_hz) && c.noise_psd_w_hz > 0,
          "must be > 0");
  }
  if (has("shadow_std_db")) {
    c.shadow_std_db = num("shadow_std_db");
    range("shadow_std_db", std::isfinite(c.shadow_std_db) && c.shadow_std_db >= 0, "must be >= 0");
  }
  if (has("rician_k")) {
    c.rician_k = num("rician_k");
    range("rician_k", c.rician_k >= 0, "must be >= 0");
  }
  if (has("theta")) {
    c.theta = num("theta");
    range("theta", c.theta > 0 && c.theta <= 1, "must lie in (0, 1]");
  }
  if (has("pilots")) {
    c.pilots = to_int("pilots", get("pilots"));
    range("pilots", c.pilots >= 0, "must be >= 0");
  }
  if (has("csi")) {
    const auto m = parse_csi_mode(get("csi"));
    if (!m) fail("csi", "expected perfect or imperfect");
    c.csi = *m;
  }
  if (has("seed")) c.master_seed = to_u64("seed", get("seed"));
  if (has("processing_fraction")) {
    c.processing_fraction = num("processing_fraction");
    range("processing_fraction", c.processing_fraction >= 0 && c.processing_fraction < 1,
          "must lie in [0, 1)");
  }
  if (has("processing_time_s")) {
    c.processing_time_s = num("processing_time_s");
    range("processing_time_s", std::isfinite(c.processing_time_s) && c.processing_time_s >= 0,
          "must be >= 0");
  }
  if (has("path_loss_exponent")) {
    c.path_loss_exponent = num("path_loss_exponent");
    range("path_loss_exponent", std::isfinite(c.path_loss_exponent) && c.path_loss_exponent > 0,
          "must be > 0");
  }
  if (has("ris_element_gain_db")) {
    c.ris_element_gain_db = num("ris_element_gain_db");
    range("ris_element_gain_db", std::isfinite(c.ris_element_gain_db), "must be finite");
  }

  if (has("sweep.param") != has("sweep.values")) {
    fail(has("sweep.param") ? "sweep.values" : "sweep.param", "missing required key");
  }
  if (has("sweep.param")) {
    SweepSpec spec;
    const auto p = parse_sweep_param(get("sweep.param"));
    if (!p) fail("sweep.param", "unknown parameter '" + std::string(get("sweep.param")) + "'");
    spec.param = *p;
    std::string_view values = get("sweep.values");
    while (!values.empty()) {
      const auto comma = values.find(',');
      const std::string_view item = trim(values.substr(0, comma));
      spec.values.push_back(to_number("sweep.values", item));
      values = comma == std::string_view::npos ? std::string_view{} : values.substr(comma + 1);
    }
    if (spec.values.empty()) fail("sweep.values", "must not be empty");
    file.sweep = std::move(spec);
  }

  c.validate();
  return file;
}

ScenarioConfig parse_config(std::string_view text) {
  ConfigFile file = parse_config_file(text);
  if (file.sweep) fail("sweep.param", "not allowed in a scenario config");
  return file.scenario;
}

std::string render_config(const ScenarioConfig& c) {
  std::ostringstream out;
  out << "area_m = " << fmt(c.area_side_m) << '\n'
      << "n_devices = " << c.n_devices << '\n'
      << "n_helpers = " << c.n_helpers << '\n'
      << "ris_elements = " << c.ris_elements << '\n'
      << "payload_bits = " << fmt(c.payload_bits) << '\n'
      << "cycle_s = " << fmt(c.cycle_time_s) << '\n'
      << "bandwidth_hz = " << fmt(c.bandwidth_hz) << '\n'
      << "carrier_hz = " << fmt(c.carrier_hz) << '\n'
      << "pmax_w = " << fmt(c.p_max_w) << '\n'
      << "noise_psd_w_hz = " << fmt(c.noise_psd_w_hz) << '\n'
      << "shadow_std_db = " << fmt(c.shadow_std_db) << '\n'
      << "rician_k = " << fmt(c.rician_k) << '\n'
      << "theta = " << fmt(c.theta) << '\n'
      << "pilots = " << c.pilots << '\n'
      << "csi = " << to_string(c.csi) << '\n'
      << "seed = " << c.master_seed << '\n'
      << "processing_fraction = " << fmt(c.processing_fraction) << '\n'
      << "processing_time_s = " << fmt(c.processing_time_s) << '\n'
      << "path_loss_exponent = " << fmt(c.path_loss_exponent) << '\n'
      << "ris_element_gain_db = " << fmt(c.ris_element_gain_db) << '\n';
  return out.str();
}

ConfigFile load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_file(buf.str());
}

}  // namespace iiotcoop
