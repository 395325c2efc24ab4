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

// Acceptance suite. One PASS/FAIL line per criterion; exit status 1 when any
// selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "iiotcoop/bandwidth.hpp"
#include "iiotcoop/campaign.hpp"
#include "iiotcoop/classify.hpp"
#include "iiotcoop/envelope.hpp"
#include "iiotcoop/grid_oracle.hpp"
#include "iiotcoop/presets.hpp"
#include "iiotcoop/protocol.hpp"
#include "iiotcoop/report.hpp"
#include "iiotcoop/ris_phases.hpp"

namespace {

using namespace iiotcoop;
using Clock = std::chrono::steady_clock;

// Tolerances.
constexpr double kFig5MinGapDb = 3.0;
constexpr double kFig6MinGapDb = 2.0;
constexpr double kFig7GapLoDb = 0.3;
constexpr double kFig7GapHiDb = 3.0;
constexpr double kFig11RisGapDb = 1.5;
constexpr double kFig11PhaseGapDb = 3.0;
constexpr std::uint64_t kSweepTrials = 10000;
constexpr double kOracleMaxDb = 0.3;
constexpr int kOracleInstances = 50;
constexpr double kOracleMaxSeconds = 120.0;
constexpr int kSpcaSolves = 1000;
constexpr double kRecheckSlack = 1e-12;
constexpr int kEnvelopeTuples = 1000000;
constexpr double kIdentityTol = 1e-12;
constexpr int kPhaseInstances = 10000;
constexpr double kScaRelTol = 1e-6;
constexpr int kScaMaxIter = 100000;
constexpr int kGridLevels = 64;
constexpr int kAfInstances = 10000;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Median power of every run of a preset, in run order.
std::map<std::string, MetricsSummary> run_preset(const std::string& name,
                                                 std::uint64_t trials = 0) {
  const RunSpec spec = preset(name);
  std::map<std::string, MetricsSummary> out;
  for (const auto& r : spec.runs) {
    out[r.label] = run_campaign(r.config, r.mode, trials ? trials : spec.trials, r.options);
  }
  return out;
}

Verdict criterion_1() {
  const auto m = run_preset("fig5");
  const double h1 = m.at("1h").p50_dbm, k1 = m.at("1of1").p50_dbm;
  const double k2 = m.at("1of2").p50_dbm, k4 = m.at("1of4").p50_dbm;
  const bool order = h1 > k1 && k1 > k2 && k2 > k4;
  const double gap = h1 - k4;
  return {order && gap >= kFig5MinGapDb,
          fmt("p50 1h=%.2f 1of1=%.2f 1of2=%.2f 1of4=%.2f dBm, 1h-1of4=%.2f dB (need >= %.1f)",
              h1, k1, k2, k4, gap, kFig5MinGapDb)};
}

Verdict criterion_2() {
  const auto m = run_preset("fig6");
  const double alg = m.at("algorithm").p50_dbm, rnd = m.at("random").p50_dbm;
  const double gap = rnd - alg;
  return {gap >= kFig6MinGapDb, fmt("p50 algorithm=%.2f random=%.2f dBm, gap=%.2f dB (need >= %.1f)",
                                    alg, rnd, gap, kFig6MinGapDb)};
}

Verdict criterion_3() {
  const auto m = run_preset("fig7a");
  const double tdma = m.at("af-tdma").p50_dbm - m.at("df-tdma").p50_dbm;
  const double fdma = m.at("af-fdma").p50_dbm - m.at("df-fdma").p50_dbm;
  const auto in_band = [](double g) { return g >= kFig7GapLoDb && g <= kFig7GapHiDb; };
  return {in_band(tdma) && in_band(fdma),
          fmt("AF-DF p50 gap TDMA=%.2f dB FDMA=%.2f dB (need in [%.1f, %.1f]); "
              "DF-TDMA=%.2f AF-TDMA=%.2f DF-FDMA=%.2f AF-FDMA=%.2f dBm",
              tdma, fdma, kFig7GapLoDb, kFig7GapHiDb, m.at("df-tdma").p50_dbm,
              m.at("af-tdma").p50_dbm, m.at("df-fdma").p50_dbm, m.at("af-fdma").p50_dbm)};
}

Verdict criterion_4() {
  const auto m = run_preset("fig11");
  const double one = m.at("1-RIS").p50_dbm, four = m.at("4-RIS").p50_dbm;
  const double rnd = m.at("4-RIS/random").p50_dbm;
  return {one - four >= kFig11RisGapDb && rnd - four >= kFig11PhaseGapDb,
          fmt("p50 1-RIS=%.2f 4-RIS=%.2f 4-RIS/random=%.2f dBm; 1-vs-4 %.2f dB (need >= %.1f), "
              "random-vs-optimized %.2f dB (need >= %.1f)",
              one, four, rnd, one - four, kFig11RisGapDb, rnd - four, kFig11PhaseGapDb)};
}

struct Curve {
  std::string name;
  std::vector<double> values;
  bool increasing = false;  // expected direction
  double seconds = 0.0;
};

// Checks a curve is monotone in the expected direction and reports it.
bool monotone(const Curve& c, std::string& detail) {
  bool ok = true;
  for (std::size_t i = 1; i < c.values.size(); ++i) {
    ok = ok && (c.increasing ? c.values[i] >= c.values[i - 1] : c.values[i] <= c.values[i - 1]);
  }
  detail += "\n    " + c.name + (ok ? " ok:" : " VIOLATED:");
  for (double v : c.values) detail += fmt(" %.4f", v);
  detail += fmt(" (%.0f s)", c.seconds);
  return ok;
}

Curve sweep_curve(const std::string& preset_name, const std::string& label, SweepParam param,
                  const std::vector<double>& values, bool overflow, bool optimize) {
  const RunSpec spec = preset(preset_name);
  const auto it = std::find_if(spec.runs.begin(), spec.runs.end(),
                               [&](const PresetRun& r) { return r.label == label; });
  TrialOptions opt = it->options;
  opt.optimize = optimize;
  const auto t0 = Clock::now();
  Curve c;
  c.name = std::string(overflow ? "overflow" : "outage") + " " + preset_name + ":" + label +
           " vs " + std::string(to_string(param));
  c.increasing = !overflow;
  for (const auto& s : sweep(it->config, it->mode, param, values, kSweepTrials, opt)) {
    c.values.push_back(overflow ? s.overflow.value() : s.outage.value());
  }
  c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return c;
}

Verdict criterion_5() {
  const std::vector<double> pmax{-55, -50, -45, -40, -35, -30, -25};
  const std::vector<double> theta{0.5, 0.6, 0.7, 0.8, 0.9};
  // Overflow at p_max needs only the screen, so those curves skip the solver.
  const std::vector<Curve> curves{
      sweep_curve("fig9", "1h/theta0.5", SweepParam::p_max, pmax, true, false),
      sweep_curve("fig9", "1of1/theta0.5", SweepParam::p_max, pmax, true, false),
      sweep_curve("fig9", "1of4/pcsi", SweepParam::p_max, pmax, true, false),
      sweep_curve("fig10", "1h", SweepParam::theta, theta, true, false),
      sweep_curve("fig10", "1of1", SweepParam::theta, theta, true, false),
      sweep_curve("fig14", "1-RIS", SweepParam::theta, theta, true, false),
      sweep_curve("fig16", "4-RIS", SweepParam::theta, theta, true, false),
      sweep_curve("fig10", "1h", SweepParam::theta, theta, false, true),
      sweep_curve("fig10", "1of1", SweepParam::theta, theta, false, true),
      sweep_curve("fig15", "1-RIS", SweepParam::theta, theta, false, true),
  };
  bool ok = true;
  int moving = 0;
  std::string detail = fmt("%llu trials per point", static_cast<unsigned long long>(kSweepTrials));
  for (const auto& c : curves) {
    ok = monotone(c, detail) && ok;
    if (c.values.front() != c.values.back()) ++moving;
  }
  // Every curve must actually move; a flat curve says nothing.
  const bool informative = moving == static_cast<int>(curves.size());
  if (!informative) detail += fmt("\n    only %d of %zu curves move", moving, curves.size());
  return {ok && informative, detail};
}

Verdict criterion_6() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  bool all_feasible = true;
  std::string detail;
  for (const Mode m : {Mode::single_hop, Mode::df_tdma, Mode::df_fdma, Mode::af_tdma,
                       Mode::af_fdma, Mode::ris_tdma}) {
    const auto suite = oracle::run_oracle_suite(m, kOracleInstances, 1);
    worst = std::max(worst, suite.max_abs_deviation_db());
    for (const auto& c : suite.cases) all_feasible = all_feasible && c.spca_feasible;
    detail += fmt(" %s=%.3f", std::string(to_string(m)).c_str(), suite.max_abs_deviation_db());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  return {worst <= kOracleMaxDb && secs < kOracleMaxSeconds && all_feasible,
          fmt("max|dev|=%.4f dB (need <= %.1f), %.1f s (need < %.0f), spca feasible=%s;", worst,
              kOracleMaxDb, secs, kOracleMaxSeconds, all_feasible ? "yes" : "no") +
              detail};
}

Verdict criterion_7() {
  const std::vector<Mode> modes{Mode::single_hop, Mode::df_tdma, Mode::df_fdma,
                                Mode::af_tdma,    Mode::af_fdma, Mode::ris_tdma};
  int solves = 0, trace_bad = 0, recheck_bad = 0, alpha_bad = 0, failed = 0;
  std::uint64_t draw = 0;
  while (solves < kSpcaSolves && draw < 20u * kSpcaSolves) {
    const Mode mode = modes[draw % modes.size()];
    ScenarioConfig c = reference_config();
    c.master_seed = 7;
    c.payload_bits = 8.0 * (32 << (draw / 6 % 4));
    c.p_max_w = dbm_to_watts(20.0);
    c.n_helpers = mode == Mode::single_hop ? 0 : 1 + static_cast<int>(draw / 24 % 4);
    c.ris_elements = mode == Mode::ris_tdma ? 16 : 0;
    c.pilots = mode == Mode::ris_tdma ? 17 : 4;
    if (draw % 2 == 1) {
      c.csi = CsiMode::imperfect;
      c.theta = 0.6;
    }
    const std::uint64_t trial = draw++;
    const Topology topo = sample_topology(c, trial);
    ChannelSet ch = sample_channels(topo, c, trial);
    if (c.csi == CsiMode::imperfect) ch = apply_estimation_error(std::move(ch), c, trial);
    const ChannelGains& g = ch.estimate;
    Schedule s = all_direct(g.devices);
    if (is_af(mode)) {
      s = classify_af(g, c.p_max_w, c, is_fdma(mode) ? 1.0 / c.n_devices : 1.0);
    } else if (is_relay_mode(mode)) {
      s = classify_df(g);
    }
    std::vector<std::vector<cdouble>> phases;
    if (mode == Mode::ris_tdma) {
      for (std::size_t n = 0; n < g.devices; ++n) {
        phases.push_back(ris_phases_closed_form(g.direct[n], g.cascade_of(n)));
      }
    }
    if (!feasible_at_pmax(mode, s, g, c, phases)) continue;
    const SolveReport r = minimize_power(mode, s, g, c, phases);
    ++solves;
    if (r.status != SolveStatus::optimal && r.status != SolveStatus::max_iter) {
      ++failed;
      continue;
    }
    for (std::size_t i = 1; i < r.objective_trace.size(); ++i) {
      if (r.objective_trace[i] > r.objective_trace[i - 1]) {
        ++trace_bad;
        break;
      }
    }
    const Budget b = budget_of(c);
    const Schedule used = is_relay_mode(mode) ? drop_degenerate_relays(s, g) : all_direct(g.devices);
    const double t = evaluate(mode, used, r.allocation, g, c, b.theta).total;
    if (!(t <= b.t_prime * (1 + kRecheckSlack))) ++recheck_bad;
    if (mode == Mode::df_fdma && !used.two_hop.empty()) {
      const AlphaRange range = df_fdma_alpha_range(used, g, r.allocation, c, b.t_prime, b.theta);
      if (range.empty() || r.allocation.alpha < range.lo * (1 - kRecheckSlack) ||
          r.allocation.alpha > range.hi * (1 + kRecheckSlack)) {
        ++alpha_bad;
      }
    }
  }
  const bool ok = solves == kSpcaSolves && trace_bad + recheck_bad + alpha_bad + failed == 0;
  return {ok, fmt("%d solves: trace violations=%d, recheck violations=%d, alpha-range "
                  "violations=%d, solver failures=%d",
                  solves, trace_bad, recheck_bad, alpha_bad, failed)};
}

Verdict criterion_8() {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  int bad_bound = 0, bad_anchor = 0;
  for (int i = 0; i < kEnvelopeTuples; ++i) {
    const double x = u(rng), y = u(rng), xa = u(rng), ya = u(rng);
    const double xy = x * y;
    const double scale = 1.0 + std::abs(xy) + xa * xa + ya * ya + x * x + y * y;
    if (theta_lower(x, y, xa, ya) > xy + kIdentityTol * scale) ++bad_bound;
    if (theta_upper(x, y, xa, ya) < xy - kIdentityTol * scale) ++bad_bound;
    const double axy = xa * ya;
    const double atol = kIdentityTol * (1.0 + xa * xa + ya * ya);
    if (std::abs(theta_lower(xa, ya, xa, ya) - axy) > atol) ++bad_anchor;
    if (std::abs(theta_upper(xa, ya, xa, ya) - axy) > atol) ++bad_anchor;
  }
  return {bad_bound == 0 && bad_anchor == 0,
          fmt("%d tuples: bound violations=%d, anchor mismatches=%d", kEnvelopeTuples, bad_bound,
              bad_anchor)};
}

Verdict criterion_9() {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> gauss;
  const auto cvec = [&](std::size_t q, double s) {
    std::vector<cdouble> v(q);
    for (auto& x : v) x = {s * gauss(rng), s * gauss(rng)};
    return v;
  };
  int cf_bad = 0, sca_bad = 0, grid_bad = 0, max_iterations = 0;
  double worst_sca = 0.0;
  for (int i = 0; i < kPhaseInstances; ++i) {
    const std::size_t q = 1 + static_cast<std::size_t>(i % 256);
    const cdouble h_d = cvec(1, 1.0)[0];
    const auto u = cvec(q, 0.2);
    double bound = std::abs(h_d);
    for (const auto& x : u) bound += std::abs(x);
    const double cf = std::abs(ris_effective_channel(h_d, u, ris_phases_closed_form(h_d, u)));
    if (std::abs(cf - bound) > kIdentityTol * bound) ++cf_bad;
    const auto v0 = ris_phases_random(q, 9, static_cast<std::uint64_t>(i), 0);
    const PhaseResult r = ris_phases_sca(h_d, u, v0, 1e-12, kScaMaxIter);
    max_iterations = std::max(max_iterations, r.iterations);
    const double rel = std::abs(r.gain_trace.back() - cf) / cf;
    worst_sca = std::max(worst_sca, rel);
    if (!(rel <= kScaRelTol)) ++sca_bad;
  }
  int grid_instances = 0;
  for (std::size_t q = 1; q <= 3; ++q) {
    const int count = q == 3 ? 20 : 200;
    for (int i = 0; i < count; ++i, ++grid_instances) {
      const cdouble h_d = cvec(1, 1.0)[0];
      const auto u = cvec(q, 1.0);
      const double cf = std::abs(ris_effective_channel(h_d, u, ris_phases_closed_form(h_d, u)));
      std::size_t combos = 1;
      for (std::size_t j = 0; j < q; ++j) combos *= kGridLevels;
      std::vector<cdouble> v(q);
      for (std::size_t code = 0; code < combos; ++code) {
        std::size_t rest = code;
        for (std::size_t j = 0; j < q; ++j) {
          v[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(rest % kGridLevels) /
                                     kGridLevels);
          rest /= kGridLevels;
        }
        if (std::abs(ris_effective_channel(h_d, u, v)) > cf * (1 + kIdentityTol)) {
          ++grid_bad;
          break;
        }
      }
    }
  }
  return {cf_bad + sca_bad + grid_bad == 0,
          fmt("closed-form mismatches=%d/%d, SCA misses=%d (worst rel %.2e, need <= %.0e, "
              "most iterations %d), grid wins=%d/%d",
              cf_bad, kPhaseInstances, sca_bad, worst_sca, kScaRelTol, max_iterations, grid_bad,
              grid_instances)};
}

// Exhaustive (K + 1)^N search maximising the summed per-device metric.
std::vector<int> brute_force(std::size_t n, std::size_t k,
                             const std::function<double(std::size_t, int)>& metric) {
  std::vector<int> choice(n), best;
  double best_value = -1.0;
  std::size_t combos = 1;
  for (std::size_t i = 0; i < n; ++i) combos *= k + 1;
  for (std::size_t code = 0; code < combos; ++code) {
    std::size_t rest = code;
    double value = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      choice[i] = static_cast<int>(rest % (k + 1)) - 1;
      rest /= k + 1;
      value += metric(i, choice[i]);
    }
    if (value > best_value) {
      best_value = value;
      best = choice;
    }
  }
  return best;
}

Verdict criterion_10() {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> lg(-12.0, -5.0);
  std::uniform_real_distribution<double> ph(0.0, 2.0 * std::numbers::pi);
  const ScenarioConfig c;
  int snr_bad = 0;
  double worst = 0.0;
  for (int i = 0; i < kAfInstances; ++i) {
    const double p = std::pow(10.0, lg(rng) + 6.0), ps = std::pow(10.0, lg(rng) + 6.0);
    const double gs = std::pow(10.0, lg(rng)), ga = std::pow(10.0, lg(rng));
    const double beta = 0.05 + 0.95 * (i % 20) / 19.0;
    const double bn = beta * c.noise_power_w();
    const double mu = af_amplification(p, gs, beta, c);
    const double mu_form = ps * mu * mu * ga * p * gs / (ps * mu * mu * ga * bn + bn);
    const double closed = p * gs * ps * ga / ((p * gs + ps * ga + bn) * bn);
    const double rel = std::abs(af_snr(p, gs, ps, ga, beta, c) - closed) / closed;
    const double rel_mu = std::abs(mu_form - closed) / closed;
    worst = std::max({worst, rel, rel_mu});
    if (rel > kIdentityTol || rel_mu > kIdentityTol) ++snr_bad;
  }

  int cls_bad = 0, cls_total = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      for (int rep = 0; rep < 200; ++rep, ++cls_total) {
        ChannelGains g;
        g.devices = n;
        g.helpers = k;
        const auto draw = [&] { return std::polar(std::sqrt(std::pow(10.0, lg(rng))), ph(rng)); };
        for (std::size_t i = 0; i < n; ++i) g.direct.push_back(draw());
        for (std::size_t i = 0; i < n * k; ++i) g.access.push_back(draw());
        for (std::size_t i = 0; i < k; ++i) g.backhaul.push_back(draw());
        const double p = rep % 2 ? 1.0 : 1e-4;
        const double beta = rep % 3 == 0 ? 1.0 / static_cast<double>(n) : 1.0;
        const double bn = beta * c.noise_power_w();
        const auto df = [&](std::size_t i, int r) {
          return r < 0 ? std::norm(g.direct[i])
                       : 0.5 * std::min(std::norm(g.access[i * k + r]), std::norm(g.backhaul[r]));
        };
        const auto af = [&](std::size_t i, int r) {
          const double sd = p * std::norm(g.direct[i]) / bn;
          if (r < 0) return std::log2(1.0 + sd);
          const double ss = p * std::norm(g.access[i * k + r]) / bn;
          const double sa = p * std::norm(g.backhaul[r]) / bn;
          return 0.5 * std::log2(1.0 + sd + ss * sa / (ss + sa + 1.0));
        };
        if (classify_df(g).relay_of != brute_force(n, k, df)) ++cls_bad;
        if (classify_af(g, p, c, beta).relay_of != brute_force(n, k, af)) ++cls_bad;
      }
    }
  }
  return {snr_bad == 0 && cls_bad == 0,
          fmt("AF SNR mismatches=%d/%d (worst rel %.2e); classification mismatches=%d/%d",
              snr_bad, kAfInstances, worst, cls_bad, 2 * cls_total)};
}

Verdict criterion_11() {
  struct Case {
    Mode mode;
    ScenarioConfig config;
    std::uint64_t trials;
  };
  std::vector<Case> cases;
  ScenarioConfig c = reference_config();
  c.payload_bits = 256;
  c.p_max_w = dbm_to_watts(20.0);
  c.master_seed = 11;
  c.n_helpers = 2;
  cases.push_back({Mode::df_tdma, c, 200});
  c.csi = CsiMode::imperfect;
  c.theta = 0.7;
  cases.push_back({Mode::af_fdma, c, 100});
  c.n_helpers = 2;
  c.ris_elements = 16;
  c.pilots = 17;
  cases.push_back({Mode::ris_tdma, c, 100});
  int mismatches = 0;
  for (const auto& k : cases) {
    const std::string base = trials_csv(run_trials(k.config, k.mode, k.trials, {}, 1));
    for (unsigned w : {4u, 16u}) {
      if (trials_csv(run_trials(k.config, k.mode, k.trials, {}, w)) != base) ++mismatches;
    }
  }
  return {mismatches == 0, fmt("%zu campaigns x workers {1,4,16}: %d CSV mismatches",
                               cases.size(), mismatches)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite"};
  int only = 0;
  app.add_option("--criterion", only, "Run one criterion (1-11); 0 runs all")
      ->check(CLI::Range(0, 11));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Verdict()>> criteria{
      criterion_1, criterion_2, criterion_3, criterion_4,  criterion_5, criterion_6,
      criterion_7, criterion_8, criterion_9, criterion_10, criterion_11};
  bool all = true;
  for (int i = 1; i <= 11; ++i) {
    if (only != 0 && i != only) continue;
    const auto t0 = Clock::now();
    Verdict v;
    try {
      v = criteria[i - 1]();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("criterion %2d: %s (%.1f s) %s\n", i, v.pass ? "PASS" : "FAIL", secs,
                v.detail.c_str());
    std::fflush(stdout);
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
