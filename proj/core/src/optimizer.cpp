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

#include "iiotcoop/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "iiotcoop/bandwidth.hpp"
#include "iiotcoop/convex.hpp"

namespace iiotcoop {
namespace {

// Payload coefficients are inflated by this factor so that interior
// solutions survive the exact-formula recheck with margin.
constexpr double kBudgetMargin = 1e-9;
// Fraction of T' targeted by the starting point.
constexpr double kStartFill = 0.9;
// Relative back-off of auxiliaries from their defining bounds at the start.
constexpr double kStartBackoff = 1e-7;
// Relay power scale of the second AF starting point.
constexpr double kQuietRelayScale = 1e-4;

struct Context {
  Mode mode;
  Schedule schedule;
  const ChannelGains& gains;
  const ScenarioConfig& config;
  Budget budget;
  std::vector<double> beta;      // per device, 1 in TDMA
  std::vector<double> beta_s;    // per relayed device, 1 in TDMA
  std::vector<double> direct;    // |h_d|^2, or |h_eff|^2 with RIS
  std::vector<std::vector<cdouble>> phases;
};

struct VarIndex {
  int x = -1;
  int y = -1;
  int gamma1 = -1;
  int gamma2 = -1;
  int lambda = -1;
};

struct Iterate {
  std::vector<double> x;       // device power / unit
  std::vector<double> y;       // relay power / unit
  std::vector<double> lambda;  // AF auxiliary SNR
  std::vector<double> gamma1;
  std::vector<double> gamma2;
  double alpha = 0.5;
};

double access_gain(const Context& c, int n) {
  return c.gains.access_gain(n, static_cast<std::size_t>(c.schedule.relay_of[n]));
}
double backhaul_gain(const Context& c, int n) {
  return c.gains.backhaul_gain(static_cast<std::size_t>(c.schedule.relay_of[n]));
}

Context make_context(Mode mode, const Schedule& schedule, const ChannelGains& gains,
                     const ScenarioConfig& config) {
  Context c{mode, schedule, gains, config, budget_of(config), {}, {}, {}, {}};
  const std::size_t n_dev = schedule.devices();
  c.beta.assign(n_dev, 1.0);
  c.beta_s.assign(n_dev, 0.0);
  for (int n : schedule.two_hop) c.beta_s[n] = 1.0;
  c.direct.resize(n_dev);
  for (std::size_t n = 0; n < n_dev; ++n) c.direct[n] = gains.direct_gain(n);
  return c;
}

Allocation base_allocation(const Context& c) {
  const std::size_t n_dev = c.schedule.devices();
  Allocation a;
  a.p_dev.assign(n_dev, 0.0);
  a.p_relay.assign(n_dev, 0.0);
  a.beta = c.beta;
  a.beta_s = c.beta_s;
  a.ris_phases = c.phases;
  return a;
}

Allocation pmax_allocation(const Context& c) {
  Allocation a = base_allocation(c);
  std::fill(a.p_dev.begin(), a.p_dev.end(), c.config.p_max_w);
  for (int n : c.schedule.two_hop) a.p_relay[n] = c.config.p_max_w;
  return a;
}

double exact_time(const Context& c, const Allocation& a) {
  return evaluate(c.mode, c.schedule, a, c.gains, c.config, c.budget.theta).total;
}

// Whether `a` meets the schedule constraints within fill * T'.
bool fits(const Context& c, const Allocation& a, double fill) {
  const double budget = fill * c.budget.t_prime;
  if (c.mode == Mode::df_fdma) {
    return !df_fdma_alpha_range(c.schedule, c.gains, a, c.config, budget, c.budget.theta).empty();
  }
  return exact_time(c, a) <= budget;
}

// Starting point: every link is driven at min(p_max, level * beta / gain)
// with the common level found by bisection so that the schedule fills
// kStartFill of T'. Relay links are scaled by `relay_scale`. Falls back to
// p_max everywhere.
Allocation start_allocation(const Context& c, double relay_scale = 1.0) {
  const double pmax = c.config.p_max_w;
  const auto build = [&](double level) {
    Allocation a = base_allocation(c);
    for (std::size_t n = 0; n < c.schedule.devices(); ++n) {
      const int i = static_cast<int>(n);
      if (c.schedule.is_two_hop(n)) {
        const double gs = access_gain(c, i);
        const double ga = backhaul_gain(c, i);
        a.p_dev[n] = gs > 0 ? std::min(pmax, level * c.beta[n] / gs) : pmax;
        const double bs = is_af(c.mode) ? c.beta[n] : c.beta_s[n];
        a.p_relay[n] = ga > 0 ? std::min(pmax, relay_scale * level * bs / ga) : pmax;
      } else {
        const double g = c.direct[n];
        a.p_dev[n] = g > 0 ? std::min(pmax, level * c.beta[n] / g) : pmax;
      }
    }
    return a;
  };
  double hi_level = 0.0;
  for (std::size_t n = 0; n < c.schedule.devices(); ++n) {
    const int i = static_cast<int>(n);
    if (c.schedule.is_two_hop(n)) {
      hi_level = std::max({hi_level, access_gain(c, i) / c.beta[n],
                           backhaul_gain(c, i) / std::max(c.beta_s[n], c.beta[n])});
    } else if (c.beta[n] > 0) {
      hi_level = std::max(hi_level, c.direct[n] / c.beta[n]);
    }
  }
  hi_level *= pmax;
  if (!(hi_level > 0) || !fits(c, build(hi_level), kStartFill)) return pmax_allocation(c);
  double lo = std::log(hi_level) - 80.0;
  double hi = std::log(hi_level);
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (fits(c, build(std::exp(mid)), kStartFill)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return build(std::exp(hi));
}

double payload_coef(const Context& c) {
  return c.config.payload_bits * (1.0 + kBudgetMargin) /
         (c.budget.theta * c.config.bandwidth_hz * c.budget.t_prime);
}

double alpha_cap(const Context& c) {
  return 1.0 - c.config.processing_fraction - c.config.processing_time_s / c.budget.t_prime;
}

// Normalised SNR slopes of one device (power unit `unit`).
struct Slopes {
  double d = 0.0;  // direct
  double s = 0.0;  // access
  double a = 0.0;  // backhaul
};

Slopes slopes(const Context& c, int n, double unit) {
  const double noise = c.config.noise_power_w();
  const bool fdma = is_fdma(c.mode);
  const double beta = fdma ? c.beta[n] : 1.0;
  Slopes s;
  s.d = c.direct[n] * unit / (beta * noise);
  if (c.schedule.is_two_hop(n)) {
    s.s = access_gain(c, n) * unit / (beta * noise);
    const double beta_a = fdma && !is_af(c.mode) ? c.beta_s[n] : beta;
    s.a = backhaul_gain(c, n) * unit / (beta_a * noise);
  }
  return s;
}

double af_lambda(const Slopes& s, double x, double y) {
  const double relayed = s.s * x * s.a * y == 0 ? 0.0 : s.s * x * s.a * y / (s.s * x + s.a * y + 1.0);
  return s.d * x + relayed;
}

Iterate iterate_from(const Context& c, const Allocation& a, double unit) {
  const std::size_t n_dev = c.schedule.devices();
  Iterate it;
  it.x.assign(n_dev, 0.0);
  it.y.assign(n_dev, 0.0);
  it.lambda.assign(n_dev, 0.0);
  it.gamma1.assign(n_dev, 0.0);
  it.gamma2.assign(n_dev, 0.0);
  const double keep = 1.0 - kStartBackoff;
  for (std::size_t n = 0; n < n_dev; ++n) {
    const int i = static_cast<int>(n);
    const Slopes s = slopes(c, i, unit);
    it.x[n] = a.p_dev[n] / unit;
    it.y[n] = a.p_relay[n] / unit;
    if (!c.schedule.is_two_hop(n)) {
      it.gamma1[n] = keep * std::log2(1.0 + s.d * it.x[n]);
    } else if (is_af(c.mode)) {
      it.lambda[n] = keep * af_lambda(s, it.x[n], it.y[n]);
      it.gamma1[n] = keep * std::log2(1.0 + it.lambda[n]);
    } else {
      it.gamma1[n] = keep * std::log2(1.0 + s.s * it.x[n]);
      const double direct = c.mode == Mode::df_fdma ? 0.0 : s.d * it.x[n];
      it.gamma2[n] = keep * std::log2(1.0 + s.a * it.y[n] + direct);
    }
  }
  if (c.mode == Mode::df_fdma) {
    const AlphaRange r =
        df_fdma_alpha_range(c.schedule, c.gains, a, c.config, c.budget.t_prime, c.budget.theta);
    it.alpha = r.empty() ? 0.5 * alpha_cap(c) : 0.5 * (r.lo + r.hi);
  }
  return it;
}

// 2^gamma - sum slope * var <= 1.
convex::Constraint rate_link(int gamma, std::vector<convex::LinearTerm> snr_terms) {
  convex::Constraint con;
  con.exponential.push_back({gamma, 1.0, 1.0});
  for (auto& t : snr_terms) con.linear.push_back({t.var, -t.coef});
  con.bound = 1.0;
  return con;
}

// Inner AF surrogate of lambda <= s_d x + s_s x s_a y / (s_s x + s_a y + 1),
// built from the bilinear envelopes around `anchor`.
convex::Constraint af_surrogate(const Slopes& s, const VarIndex& v, double xa, double ya,
                                double la) {
  const double k1 = std::sqrt(la / xa);
  const double k2 = std::sqrt(la / ya);
  const double k3 = std::sqrt(xa / ya);
  const double scale = la * (s.s * xa + s.a * ya + 1.0);
  const double cross = s.a * (s.s + s.d);
  const double ua = 2.0 * std::sqrt(xa * ya);  // xa / k3 + k3 ya
  convex::Constraint con;
  con.square.push_back({{{v.lambda, 1.0 / k1}, {v.x, k1}}, 0.0, 0.25 * s.s / scale});
  con.square.push_back({{{v.lambda, 1.0 / k2}, {v.y, k2}}, 0.0, 0.25 * s.a / scale});
  if (cross > 0) {
    con.square.push_back({{{v.x, 1.0 / k3}, {v.y, -k3}}, 0.0, 0.25 * cross / scale});
  }
  con.linear.push_back({v.lambda, 1.0 / scale});
  con.linear.push_back({v.x, (-0.5 * cross * ua / k3 - 2.0 * s.d * s.s * xa - s.d) / scale});
  con.linear.push_back({v.y, -0.5 * cross * ua * k3 / scale});
  con.constant = (0.25 * cross * ua * ua + s.d * s.s * xa * xa) / scale;
  con.bound = 0.0;
  return con;
}

struct Built {
  convex::Problem problem;
  std::vector<VarIndex> vars;
  int alpha = -1;
  std::vector<double> start;
};

Built build_problem(const Context& c, double unit, const Iterate& anchor) {
  const std::size_t n_dev = c.schedule.devices();
  const double x_hi = c.config.p_max_w / unit;
  const double coef = payload_coef(c);
  const bool fdma = is_fdma(c.mode);
  const bool af = is_af(c.mode);

  Built b;
  convex::Problem& p = b.problem;
  b.vars.resize(n_dev);
  convex::Constraint tdma_time;
  tdma_time.bound = 1.0;

  if (c.mode == Mode::df_fdma && !c.schedule.two_hop.empty()) {
    b.alpha = p.add_variable(0.0, 1.0);
  }

  const auto gamma_var = [&](double weight, double snr_cap) {
    return p.add_variable(0.5 * weight, std::log2(1.0 + snr_cap) + 1.0);
  };

  for (std::size_t n = 0; n < n_dev; ++n) {
    const int i = static_cast<int>(n);
    VarIndex& v = b.vars[n];
    const Slopes s = slopes(c, i, unit);
    const double weight = fdma ? coef / c.beta[n] : coef;
    v.x = p.add_variable(0.0, x_hi, 1.0);

    if (!c.schedule.is_two_hop(n)) {
      v.gamma1 = gamma_var(weight, s.d * x_hi);
      p.constraints.push_back(rate_link(v.gamma1, {{v.x, s.d}}));
      if (fdma) {
        convex::Constraint t;
        t.reciprocal.push_back({v.gamma1, weight});
        t.bound = 1.0;
        p.constraints.push_back(t);
      } else {
        tdma_time.reciprocal.push_back({v.gamma1, weight});
      }
      continue;
    }

    v.y = p.add_variable(0.0, x_hi, 1.0);
    if (af) {
      const double lambda_cap = s.d * x_hi + std::min(s.s, s.a) * x_hi + 1.0;
      v.lambda = p.add_variable(0.0, lambda_cap);
      v.gamma1 = gamma_var(2.0 * weight, lambda_cap);
      convex::Constraint link;
      link.exponential.push_back({v.gamma1, 1.0, 1.0});
      link.linear.push_back({v.lambda, -1.0});
      link.bound = 1.0;
      p.constraints.push_back(link);
      p.constraints.push_back(
          af_surrogate(s, v, anchor.x[n], anchor.y[n], anchor.lambda[n]));
      if (fdma) {
        convex::Constraint t;
        t.reciprocal.push_back({v.gamma1, 2.0 * weight});
        t.bound = 1.0;
        p.constraints.push_back(t);
      } else {
        tdma_time.reciprocal.push_back({v.gamma1, 2.0 * weight});
      }
      continue;
    }

    // Decode-and-forward.
    v.gamma1 = gamma_var(weight, s.s * x_hi);
    p.constraints.push_back(rate_link(v.gamma1, {{v.x, s.s}}));
    if (fdma) {
      const double weight2 = coef / c.beta_s[n];
      v.gamma2 = gamma_var(weight2, s.a * x_hi);
      p.constraints.push_back(rate_link(v.gamma2, {{v.y, s.a}}));
      convex::Constraint first;
      first.reciprocal.push_back({v.gamma1, weight});
      first.linear.push_back({b.alpha, -1.0});
      first.bound = 0.0;
      p.constraints.push_back(first);
      convex::Constraint second;
      second.reciprocal.push_back({v.gamma2, weight2});
      second.linear.push_back({b.alpha, 1.0});
      second.bound = alpha_cap(c);
      p.constraints.push_back(second);
    } else {
      v.gamma2 = gamma_var(weight, (s.a + s.d) * x_hi);
      p.constraints.push_back(rate_link(v.gamma2, {{v.y, s.a}, {v.x, s.d}}));
      tdma_time.reciprocal.push_back({v.gamma1, weight});
      tdma_time.reciprocal.push_back({v.gamma2, weight});
    }
  }
  if (!fdma) p.constraints.push_back(tdma_time);

  b.start.assign(p.size(), 0.0);
  if (b.alpha >= 0) b.start[b.alpha] = anchor.alpha;
  for (std::size_t n = 0; n < n_dev; ++n) {
    const VarIndex& v = b.vars[n];
    b.start[v.x] = anchor.x[n];
    if (v.y >= 0) b.start[v.y] = anchor.y[n];
    if (v.lambda >= 0) b.start[v.lambda] = anchor.lambda[n];
    if (v.gamma1 >= 0) b.start[v.gamma1] = anchor.gamma1[n];
    if (v.gamma2 >= 0) b.start[v.gamma2] = anchor.gamma2[n];
  }
  return b;
}

Iterate read_iterate(const Built& b, const std::vector<double>& z) {
  Iterate it;
  const std::size_t n_dev = b.vars.size();
  it.x.assign(n_dev, 0.0);
  it.y.assign(n_dev, 0.0);
  it.lambda.assign(n_dev, 0.0);
  it.gamma1.assign(n_dev, 0.0);
  it.gamma2.assign(n_dev, 0.0);
  if (b.alpha >= 0) it.alpha = z[b.alpha];
  for (std::size_t n = 0; n < n_dev; ++n) {
    const VarIndex& v = b.vars[n];
    it.x[n] = z[v.x];
    if (v.y >= 0) it.y[n] = z[v.y];
    if (v.lambda >= 0) it.lambda[n] = z[v.lambda];
    if (v.gamma1 >= 0) it.gamma1[n] = z[v.gamma1];
    if (v.gamma2 >= 0) it.gamma2[n] = z[v.gamma2];
  }
  return it;
}

Allocation to_allocation(const Context& c, const Iterate& it, double unit) {
  Allocation a = base_allocation(c);
  const double pmax = c.config.p_max_w;
  for (std::size_t n = 0; n < c.schedule.devices(); ++n) {
    a.p_dev[n] = std::clamp(it.x[n] * unit, 0.0, pmax);
    if (c.schedule.is_two_hop(n)) a.p_relay[n] = std::clamp(it.y[n] * unit, 0.0, pmax);
  }
  if (c.mode == Mode::df_fdma) a.alpha = it.alpha;
  return a;
}

bool recheck(const Context& c, const Allocation& a) {
  const double limit = c.budget.t_prime * (1.0 + 1e-12);
  if (!(exact_time(c, a) <= limit)) return false;
  if (c.mode == Mode::df_fdma && !c.schedule.two_hop.empty()) {
    const AlphaRange r =
        df_fdma_alpha_range(c.schedule, c.gains, a, c.config, c.budget.t_prime, c.budget.theta);
    const double slack = 1e-12;
    if (a.alpha < r.lo - slack || a.alpha > r.hi + slack) return false;
  }
  return true;
}

SolveReport run_spca(const Context& c, const SpcaOptions& options, const Allocation& start) {
  SolveReport report;
  report.allocation = start;
  if (c.mode == Mode::df_fdma) {
    const AlphaRange r = df_fdma_alpha_range(c.schedule, c.gains, start, c.config,
                                             c.budget.t_prime, c.budget.theta);
    report.allocation.alpha = r.empty() ? 0.5 * alpha_cap(c) : 0.5 * (r.lo + r.hi);
  }
  report.initial_objective_watts = start.total_power();
  report.objective_watts = report.initial_objective_watts;
  report.objective_trace.push_back(report.objective_watts);
  if (c.config.payload_bits <= 0) {
    Allocation zero = base_allocation(c);
    report.allocation = zero;
    report.objective_watts = 0.0;
    report.objective_trace.push_back(0.0);
    report.status = SolveStatus::optimal;
    return report;
  }

  double unit = 0.0;
  for (double p : start.p_dev) unit = std::max(unit, p);
  for (double p : start.p_relay) unit = std::max(unit, p);
  if (!(unit > 0)) unit = c.config.p_max_w;

  Iterate anchor = iterate_from(c, start, unit);
  const bool anchored = is_af(c.mode) && !c.schedule.two_hop.empty();
  for (std::size_t n = 0; n < c.schedule.devices() && anchored; ++n) {
    if (c.schedule.is_two_hop(n) && !(anchor.x[n] > 0 && anchor.y[n] > 0 && anchor.lambda[n] > 0)) {
      report.status = SolveStatus::numerical_failure;
      return report;
    }
  }

  report.status = SolveStatus::max_iter;
  for (int it = 0; it < options.max_iterations; ++it) {
    const Built built = build_problem(c, unit, anchor);
    const convex::Result r = convex::solve(built.problem, built.start);
    report.newton_steps += r.newton_steps;
    ++report.iterations;
    if (r.status != convex::Status::optimal) {
      if (it == 0) report.status = SolveStatus::numerical_failure;
      else report.status = SolveStatus::optimal;
      break;
    }
    const Iterate next = read_iterate(built, r.x);
    const Allocation a = to_allocation(c, next, unit);
    const double objective = a.total_power();
    const double previous = report.objective_watts;
    if (objective > previous || !recheck(c, a)) {
      // Keep the previous point; the trace never increases.
      report.status = it == 0 ? SolveStatus::numerical_failure : SolveStatus::optimal;
      break;
    }
    report.allocation = a;
    report.objective_watts = objective;
    report.objective_trace.push_back(objective);
    report.kkt_residual = r.kkt_residual;
    anchor = next;
    if (!anchored || previous - objective <= options.tolerance * previous) {
      report.status = SolveStatus::optimal;
      break;
    }
  }
  return report;
}

SolveReport infeasible_report(const Context& c) {
  SolveReport report;
  report.status = SolveStatus::infeasible_at_pmax;
  report.allocation = pmax_allocation(c);
  return report;
}

SolveReport solve_relay_mode(Mode mode, const Schedule& schedule, const ChannelGains& estimate,
                             const ScenarioConfig& config, const SpcaOptions& options) {
  const Schedule clean = drop_degenerate_relays(schedule, estimate);
  Context c = make_context(mode, clean, estimate, config);
  if (!feasible_at_pmax(mode, clean, estimate, config)) return infeasible_report(c);

  if (mode == Mode::df_fdma || mode == Mode::af_fdma) {
    const Allocation full = pmax_allocation(c);
    BandwidthSplit split = mode == Mode::df_fdma
                               ? allocate_bandwidth_maxmin_df(clean, estimate, full, config)
                               : allocate_bandwidth_maxmin_af(clean, estimate, full, config);
    c.beta = split.beta;
    c.beta_s = split.beta_s;
    if (!fits(c, pmax_allocation(c), 1.0)) {
      const FdmaScreen screen =
          mode == Mode::df_fdma
              ? screen_df_fdma(clean, estimate, full, config, c.budget.t_prime, c.budget.theta)
              : screen_af_fdma(clean, estimate, full, config, c.budget.t_prime, c.budget.theta);
      c.beta = screen.split.beta;
      c.beta_s = screen.split.beta_s;
    }
  }
  SolveReport best = run_spca(c, options, start_allocation(c));
  if (!is_af(mode) || clean.two_hop.empty()) return best;
  // AF is not convex in the powers; a second start with the relays nearly
  // silent catches optima where relayed devices lean on the direct link.
  SolveReport quiet = run_spca(c, options, start_allocation(c, kQuietRelayScale));
  const auto usable = [](const SolveReport& r) {
    return r.status == SolveStatus::optimal || r.status == SolveStatus::max_iter;
  };
  const int steps = best.newton_steps + quiet.newton_steps;
  if (usable(quiet) && (!usable(best) || quiet.objective_watts < best.objective_watts)) {
    best = std::move(quiet);
  }
  best.newton_steps = steps;
  return best;
}

}  // namespace

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::optimal:
      return "optimal";
    case SolveStatus::max_iter:
      return "max_iter";
    case SolveStatus::infeasible_at_pmax:
      return "infeasible_at_pmax";
    case SolveStatus::numerical_failure:
      return "numerical_failure";
  }
  return "unknown";
}

Budget budget_of(const ScenarioConfig& config) {
  return {training_budget(config).t_prime_s, config.effective_theta()};
}

bool feasible_at_pmax(Mode mode, const Schedule& schedule, const ChannelGains& estimate,
                      const ScenarioConfig& config,
                      std::span<const std::vector<cdouble>> ris_phases) {
  const Budget budget = budget_of(config);
  Allocation full = full_power_allocation(schedule, config);
  switch (mode) {
    case Mode::df_fdma:
      return screen_df_fdma(schedule, estimate, full, config, budget.t_prime, budget.theta)
          .feasible;
    case Mode::af_fdma:
      return screen_af_fdma(schedule, estimate, full, config, budget.t_prime, budget.theta)
          .feasible;
    case Mode::ris_tdma:
      full.ris_phases.assign(ris_phases.begin(), ris_phases.end());
      break;
    default:
      break;
  }
  if (mode == Mode::single_hop || mode == Mode::ris_tdma) {
    const Schedule direct = all_direct(estimate.devices);
    return evaluate(mode, direct, full, estimate, config, budget.theta).total <= budget.t_prime;
  }
  return evaluate(mode, schedule, full, estimate, config, budget.theta).total <= budget.t_prime;
}

SolveReport minimize_power_df_tdma(const Schedule& schedule, const ChannelGains& estimate,
                                   const ScenarioConfig& config, const SpcaOptions& options) {
  return solve_relay_mode(Mode::df_tdma, schedule, estimate, config, options);
}

SolveReport minimize_power_df_fdma(const Schedule& schedule, const ChannelGains& estimate,
                                   const ScenarioConfig& config, const SpcaOptions& options) {
  return solve_relay_mode(Mode::df_fdma, schedule, estimate, config, options);
}

SolveReport minimize_power_af_tdma(const Schedule& schedule, const ChannelGains& estimate,
                                   const ScenarioConfig& config, const SpcaOptions& options) {
  return solve_relay_mode(Mode::af_tdma, schedule, estimate, config, options);
}

SolveReport minimize_power_af_fdma(const Schedule& schedule, const ChannelGains& estimate,
                                   const ScenarioConfig& config, const SpcaOptions& options) {
  return solve_relay_mode(Mode::af_fdma, schedule, estimate, config, options);
}

SolveReport minimize_power_ris(const ChannelGains& estimate,
                               const std::vector<std::vector<cdouble>>& phases,
                               const ScenarioConfig& config, const SpcaOptions& options) {
  const Schedule schedule = all_direct(estimate.devices);
  Context c = make_context(Mode::ris_tdma, schedule, estimate, config);
  if (estimate.total_elements() > 0 && !phases.empty()) {
    c.phases = phases;
    for (std::size_t n = 0; n < estimate.devices; ++n) {
      c.direct[n] = std::norm(
          ris_effective_channel(estimate.direct[n], estimate.cascade_of(n), phases[n]));
    }
  }
  if (!feasible_at_pmax(Mode::ris_tdma, schedule, estimate, config, c.phases)) {
    return infeasible_report(c);
  }
  return run_spca(c, options, start_allocation(c));
}

SolveReport minimize_power(Mode mode, const Schedule& schedule, const ChannelGains& estimate,
                           const ScenarioConfig& config,
                           const std::vector<std::vector<cdouble>>& ris_phases,
                           const SpcaOptions& options) {
  switch (mode) {
    case Mode::single_hop: {
      const Schedule direct = all_direct(estimate.devices);
      Context c = make_context(Mode::single_hop, direct, estimate, config);
      if (!feasible_at_pmax(Mode::single_hop, direct, estimate, config)) {
        return infeasible_report(c);
      }
      return run_spca(c, options, start_allocation(c));
    }
    case Mode::df_tdma:
      return minimize_power_df_tdma(schedule, estimate, config, options);
    case Mode::df_fdma:
      return minimize_power_df_fdma(schedule, estimate, config, options);
    case Mode::af_tdma:
      return minimize_power_af_tdma(schedule, estimate, config, options);
    case Mode::af_fdma:
      return minimize_power_af_fdma(schedule, estimate, config, options);
    case Mode::ris_tdma:
      return minimize_power_ris(estimate, ris_phases, config, options);
  }
  return {};
}

}  // namespace iiotcoop
