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

#include "iiotcoop/campaign.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

#include "iiotcoop/classify.hpp"
#include "iiotcoop/ris_phases.hpp"
#include "iiotcoop/scenario.hpp"

namespace iiotcoop {
namespace {

constexpr std::array<std::pair<Classification, std::string_view>, 4> kClassificationNames{{
    {Classification::algorithm, "algorithm"},
    {Classification::all_direct, "all_direct"},
    {Classification::all_cooperative, "all_cooperative"},
    {Classification::random, "random"},
}};

constexpr std::array<std::pair<PhasePolicy, std::string_view>, 3> kPhaseNames{{
    {PhasePolicy::closed_form, "closed_form"},
    {PhasePolicy::sca, "sca"},
    {PhasePolicy::random, "random"},
}};

constexpr std::array<std::pair<SweepParam, std::string_view>, 6> kSweepNames{{
    {SweepParam::p_max, "pmax_dbm"},
    {SweepParam::theta, "theta"},
    {SweepParam::helpers, "n_helpers"},
    {SweepParam::elements, "ris_elements"},
    {SweepParam::payload, "payload_bytes"},
    {SweepParam::pilots, "pilots"},
}};

template <typename E, std::size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N>& table, E value) {
  for (const auto& [e, name] : table) {
    if (e == value) return name;
  }
  return "unknown";
}

template <typename E, std::size_t N>
std::optional<E> parse_name(const std::array<std::pair<E, std::string_view>, N>& table,
                            std::string_view name) {
  for (const auto& [e, n] : table) {
    if (n == name) return e;
  }
  return std::nullopt;
}

Schedule make_schedule(const ScenarioConfig& config, Mode mode, const ChannelGains& estimate,
                       std::uint64_t trial_index, Classification policy) {
  if (!is_relay_mode(mode)) return all_direct(estimate.devices);
  Schedule s;
  switch (policy) {
    case Classification::algorithm:
      if (is_af(mode)) {
        const double beta = is_fdma(mode) ? 1.0 / static_cast<double>(estimate.devices) : 1.0;
        s = classify_af(estimate, config.p_max_w, config, beta);
      } else {
        s = classify_df(estimate);
      }
      break;
    case Classification::all_direct:
      s = all_direct(estimate.devices);
      break;
    case Classification::all_cooperative:
      s = classify_all_cooperative(estimate);
      break;
    case Classification::random:
      s = classify_random(estimate, config, trial_index);
      break;
  }
  return drop_degenerate_relays(std::move(s), estimate);
}

std::vector<std::vector<cdouble>> choose_phases(const ScenarioConfig& config,
                                                const ChannelGains& estimate,
                                                std::uint64_t trial_index, PhasePolicy policy) {
  std::vector<std::vector<cdouble>> phases;
  const std::size_t q = estimate.total_elements();
  if (q == 0) return phases;
  phases.resize(estimate.devices);
  for (std::size_t n = 0; n < estimate.devices; ++n) {
    const auto u = estimate.cascade_of(n);
    switch (policy) {
      case PhasePolicy::closed_form:
        phases[n] = ris_phases_closed_form(estimate.direct[n], u);
        break;
      case PhasePolicy::sca: {
        const auto init = ris_phases_random(q, config.master_seed, trial_index, n);
        phases[n] = ris_phases_sca(estimate.direct[n], u, init).v;
        break;
      }
      case PhasePolicy::random:
        phases[n] = ris_phases_random(q, config.master_seed, trial_index, n);
        break;
    }
  }
  return phases;
}

}  // namespace

std::string_view to_string(Classification c) { return name_of(kClassificationNames, c); }
std::string_view to_string(PhasePolicy p) { return name_of(kPhaseNames, p); }
std::string_view to_string(SweepParam p) { return name_of(kSweepNames, p); }
std::optional<Classification> parse_classification(std::string_view name) {
  return parse_name(kClassificationNames, name);
}
std::optional<PhasePolicy> parse_phase_policy(std::string_view name) {
  return parse_name(kPhaseNames, name);
}
std::optional<SweepParam> parse_sweep_param(std::string_view name) {
  return parse_name(kSweepNames, name);
}

double power_dbm(double watts) { return watts_to_dbm(std::max(watts, kPowerFloorW)); }

TrialOutcome run_trial(const ScenarioConfig& config, Mode mode, std::uint64_t trial_index,
                       const TrialOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  config.validate();
  validate_mode(config, mode);

  TrialOutcome out;
  out.trial_index = trial_index;
  out.mode = mode;

  const Topology topo = sample_topology(config, trial_index);
  ChannelSet channels = sample_channels(topo, config, trial_index);
  if (config.csi == CsiMode::imperfect) {
    channels = apply_estimation_error(std::move(channels), config, trial_index);
  }
  const Budget budget = budget_of(config);
  const ChannelGains& est = channels.estimate;

  const Schedule schedule = make_schedule(config, mode, est, trial_index, options.classification);
  out.n1h = static_cast<int>(schedule.one_hop.size());
  out.n2h = static_cast<int>(schedule.two_hop.size());
  const auto phases =
      mode == Mode::ris_tdma ? choose_phases(config, est, trial_index, options.phases)
                             : std::vector<std::vector<cdouble>>{};

  const double policy_power =
      config.p_max_w * static_cast<double>(schedule.devices() + schedule.relay_set.size());
  out.feasible = feasible_at_pmax(mode, schedule, est, config, phases);

  if (!out.feasible || !options.optimize) {
    out.overflow = !out.feasible;
    out.status = out.feasible ? SolveStatus::optimal : SolveStatus::infeasible_at_pmax;
    out.total_power_w = policy_power;
  } else {
    const SolveReport report = minimize_power(mode, schedule, est, config, phases);
    out.status = report.status;
    out.iterations = report.iterations;
    if (report.status == SolveStatus::infeasible_at_pmax) {
      out.overflow = true;
      out.total_power_w = policy_power;
    } else {
      out.total_power_w = report.objective_watts;
      const Schedule& used = is_relay_mode(mode) ? drop_degenerate_relays(schedule, est)
                                                 : all_direct(est.devices);
      const double t = evaluate(mode, used, report.allocation, est, config, budget.theta).total;
      out.recheck_ok = t <= budget.t_prime * (1.0 + 1e-12);
      out.overflow = overflow_check(t, budget.t_prime * (1.0 + 1e-12));
      if (config.csi == CsiMode::imperfect) {
        out.outage = outage_check(mode, used, report.allocation, channels.truth, est, config,
                                  budget.theta);
      }
    }
  }
  out.total_power_dbm = power_dbm(out.total_power_w);
  out.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return out;
}

unsigned default_workers() {
  if (const char* env = std::getenv("IIOTCOOP_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<TrialOutcome> run_trials(const ScenarioConfig& config, Mode mode,
                                     std::uint64_t n_trials, const TrialOptions& options,
                                     unsigned workers) {
  if (n_trials < 1) throw ConfigError("trials: must be >= 1");
  config.validate();
  validate_mode(config, mode);
  training_budget(config);
  if (workers == 0) workers = default_workers();
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n_trials));

  std::vector<TrialOutcome> outcomes(n_trials);
  std::atomic<std::uint64_t> next{0};
  const auto work = [&] {
    for (std::uint64_t i = next++; i < n_trials; i = next++) {
      outcomes[i] = run_trial(config, mode, i, options);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return outcomes;
}

std::vector<std::pair<double, double>> empirical_cdf(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("empirical_cdf: empty sample");
  std::sort(values.begin(), values.end());
  const auto n = static_cast<double>(values.size());
  std::vector<std::pair<double, double>> cdf;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i + 1 < values.size() && values[i + 1] == values[i]) continue;
    cdf.emplace_back(values[i], static_cast<double>(i + 1) / n);
  }
  return cdf;
}

double cdf_at(const std::vector<std::pair<double, double>>& cdf, double x) {
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), x,
                                   [](double v, const auto& p) { return v < p.first; });
  return it == cdf.begin() ? 0.0 : std::prev(it)->second;
}

double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

RateEstimate make_rate(std::uint64_t count, std::uint64_t trials) {
  RateEstimate r;
  r.count = count;
  r.trials = trials;
  if (trials == 0) return r;
  if (count > 0) {
    r.rate = static_cast<double>(count) / static_cast<double>(trials);
  } else {
    r.upper_bound = 1.0 / static_cast<double>(trials);
  }
  return r;
}

std::string RateEstimate::display() const {
  if (rate) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", *rate);
    return buf;
  }
  return "< 1/" + std::to_string(trials);
}

double RateEstimate::value() const { return rate.value_or(0.0); }

MetricsSummary summarize(Mode mode, const std::vector<TrialOutcome>& outcomes) {
  MetricsSummary s;
  s.mode = mode;
  s.trial_count = outcomes.size();
  std::uint64_t overflow = 0;
  std::uint64_t outage = 0;
  std::uint64_t optimized = 0;
  double iterations = 0.0;
  std::vector<double> powers;
  for (const auto& o : outcomes) {
    if (o.overflow) {
      ++overflow;
    } else {
      powers.push_back(o.total_power_dbm);
    }
    if (o.feasible) ++s.feasible_count;
    if (o.outage) ++outage;
    if (!o.recheck_ok) ++s.recheck_failures;
    if (o.status == SolveStatus::numerical_failure) ++s.solver_failures;
    if (o.iterations > 0) {
      ++optimized;
      iterations += o.iterations;
    }
  }
  s.overflow = make_rate(overflow, s.trial_count);
  s.outage = make_rate(outage, s.trial_count);
  s.mean_iterations = optimized > 0 ? iterations / static_cast<double>(optimized) : 0.0;
  std::sort(powers.begin(), powers.end());
  if (!powers.empty()) s.cdf_points = empirical_cdf(powers);
  s.p5_dbm = quantile(powers, 0.05);
  s.p50_dbm = quantile(powers, 0.50);
  s.p95_dbm = quantile(powers, 0.95);
  return s;
}

MetricsSummary run_campaign(const ScenarioConfig& config, Mode mode, std::uint64_t n_trials,
                            const TrialOptions& options, unsigned workers) {
  return summarize(mode, run_trials(config, mode, n_trials, options, workers));
}

ScenarioConfig with_parameter(ScenarioConfig config, SweepParam param, double value) {
  switch (param) {
    case SweepParam::p_max:
      config.p_max_w = dbm_to_watts(value);
      break;
    case SweepParam::theta:
      config.theta = value;
      break;
    case SweepParam::helpers:
      config.n_helpers = static_cast<int>(std::lround(value));
      break;
    case SweepParam::elements:
      config.ris_elements = static_cast<int>(std::lround(value));
      config.pilots = config.ris_elements + 1;
      break;
    case SweepParam::payload:
      config.payload_bits = 8.0 * value;
      break;
    case SweepParam::pilots:
      config.pilots = static_cast<int>(std::lround(value));
      break;
  }
  return config;
}

std::vector<MetricsSummary> sweep(const ScenarioConfig& config, Mode mode, SweepParam param,
                                  const std::vector<double>& values, std::uint64_t n_trials,
                                  const TrialOptions& options, unsigned workers) {
  if (values.empty()) throw ConfigError("sweep.values: must not be empty");
  std::vector<MetricsSummary> out;
  out.reserve(values.size());
  for (double v : values) {
    out.push_back(run_campaign(with_parameter(config, param, v), mode, n_trials, options, workers));
  }
  return out;
}

}  // namespace iiotcoop
