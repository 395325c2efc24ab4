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

#include "iiotcoop/convex.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace iiotcoop::convex {
namespace {

constexpr double kLn2 = std::numbers::ln2;

// Gradient and Hessian of one constraint function, accumulated into the
// dense objects provided by the caller.
struct ConstraintEval {
  double value = 0.0;
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;
};

bool eval_constraint(const Constraint& c, const Eigen::Ref<const Eigen::VectorXd>& x, ConstraintEval& out,
                     bool derivatives) {
  double v = c.constant;
  if (derivatives) {
    out.grad.setZero();
    out.hess.setZero();
  }
  for (const auto& t : c.linear) {
    v += t.coef * x[t.var];
    if (derivatives) out.grad[t.var] += t.coef;
  }
  for (const auto& t : c.reciprocal) {
    const double xi = x[t.var];
    if (!(xi > 0)) return false;
    v += t.coef / xi;
    if (derivatives) {
      out.grad[t.var] -= t.coef / (xi * xi);
      out.hess(t.var, t.var) += 2.0 * t.coef / (xi * xi * xi);
    }
  }
  for (const auto& t : c.exponential) {
    const double e = t.coef * std::exp2(t.scale * x[t.var]);
    v += e;
    if (derivatives) {
      const double a = t.scale * kLn2;
      out.grad[t.var] += a * e;
      out.hess(t.var, t.var) += a * a * e;
    }
  }
  for (const auto& t : c.square) {
    double inner = t.offset;
    for (const auto& [j, w] : t.weights) inner += w * x[j];
    v += t.coef * inner * inner;
    if (derivatives) {
      for (const auto& [i, wi] : t.weights) {
        out.grad[i] += 2.0 * t.coef * inner * wi;
        for (const auto& [j, wj] : t.weights) out.hess(i, j) += 2.0 * t.coef * wi * wj;
      }
    }
  }
  out.value = v;
  return std::isfinite(v);
}

// Barrier objective t * c^T z - sum log(slacks). In phase I the last entry
// of z is the shared constraint slack s and the cost is on s only.
class Barrier {
 public:
  Barrier(const Problem& p, bool phase_one)
      : p_(p), phase_one_(phase_one), n_(p.size()), dim_(n_ + (phase_one ? 1 : 0)) {
    scratch_.grad.resize(n_);
    scratch_.hess.resize(n_, n_);
  }

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] int barrier_terms() const {
    return 2 * n_ + static_cast<int>(p_.constraints.size());
  }

  [[nodiscard]] double linear_objective(const Eigen::VectorXd& z) const {
    if (phase_one_) return z[n_];
    double v = 0.0;
    for (int i = 0; i < n_; ++i) v += p_.cost[i] * z[i];
    return v;
  }

  // Returns +inf outside the domain.
  double value(const Eigen::VectorXd& z, double t) {
    double phi = t * linear_objective(z);
    for (int i = 0; i < n_; ++i) {
      const double a = z[i] - p_.lower[i];
      const double b = p_.upper[i] - z[i];
      if (!(a > 0) || !(b > 0)) return kInfinity;
      phi -= std::log(a) + std::log(b);
    }
    const double s = phase_one_ ? z[n_] : 0.0;
    for (const auto& c : p_.constraints) {
      if (!eval_constraint(c, z.head(n_), scratch_, false)) return kInfinity;
      const double slack = c.bound - scratch_.value + s;
      if (!(slack > 0)) return kInfinity;
      phi -= std::log(slack);
    }
    return phi;
  }

  void derivatives(const Eigen::VectorXd& z, double t, Eigen::VectorXd& g, Eigen::MatrixXd& h) {
    g.setZero(dim_);
    h.setZero(dim_, dim_);
    if (phase_one_) {
      g[n_] = t;
    } else {
      for (int i = 0; i < n_; ++i) g[i] = t * p_.cost[i];
    }
    for (int i = 0; i < n_; ++i) {
      const double a = z[i] - p_.lower[i];
      const double b = p_.upper[i] - z[i];
      g[i] += -1.0 / a + 1.0 / b;
      h(i, i) += 1.0 / (a * a) + 1.0 / (b * b);
    }
    const double s = phase_one_ ? z[n_] : 0.0;
    Eigen::VectorXd full(dim_);
    for (const auto& c : p_.constraints) {
      eval_constraint(c, z.head(n_), scratch_, true);
      const double slack = c.bound - scratch_.value + s;
      full.head(n_) = scratch_.grad;
      if (phase_one_) full[n_] = -1.0;
      g += full / slack;
      h.topLeftCorner(n_, n_) += scratch_.hess / slack;
      h += full * full.transpose() / (slack * slack);
    }
  }

  static constexpr double kInfinity = std::numeric_limits<double>::infinity();

 private:
  const Problem& p_;
  bool phase_one_;
  int n_;
  int dim_;
  ConstraintEval scratch_;
};

enum class Centering { converged, failed };

// Damped Newton minimisation of the barrier at fixed t.
Centering center(Barrier& barrier, Eigen::VectorXd& z, double t, int& steps, int max_steps,
                 const std::function<bool(const Eigen::VectorXd&)>& early_exit) {
  Eigen::VectorXd g;
  Eigen::MatrixXd h;
  double last_decrement = std::numeric_limits<double>::infinity();
  for (;;) {
    if (steps >= max_steps) return Centering::failed;
    barrier.derivatives(z, t, g, h);
    Eigen::LDLT<Eigen::MatrixXd> ldlt(h);
    Eigen::VectorXd dz = ldlt.solve(-g);
    if (ldlt.info() != Eigen::Success || !dz.allFinite()) {
      const double reg = 1e-12 * std::max(1.0, h.diagonal().cwiseAbs().maxCoeff());
      h.diagonal().array() += reg;
      dz = h.ldlt().solve(-g);
      if (!dz.allFinite()) return Centering::failed;
    }
    const double decrement = -g.dot(dz);
    if (decrement < 0) return Centering::failed;
    if (decrement / 2.0 <= 1e-10) return Centering::converged;
    // Rounding floor: a small decrement that no longer shrinks.
    if (decrement < 1e-6 && decrement > 0.5 * last_decrement) return Centering::converged;
    last_decrement = decrement;
    ++steps;

    const double phi = barrier.value(z, t);
    double step = 1.0;
    bool accepted = false;
    for (int ls = 0; ls < 80; ++ls, step *= 0.5) {
      const Eigen::VectorXd trial = z + step * dz;
      const double phi_new = barrier.value(trial, t);
      if (!std::isfinite(phi_new)) continue;
      // Near the centre the full step is taken even when rounding hides the
      // decrease.
      const bool quadratic_region = step == 1.0 && decrement < 1e-4;
      if (quadratic_region || phi_new <= phi - 0.25 * step * decrement) {
        z = trial;
        accepted = true;
        break;
      }
    }
    if (!accepted) return decrement < 1e-6 ? Centering::converged : Centering::failed;
    if (early_exit && early_exit(z)) return Centering::converged;
  }
}

double max_violation(const Problem& p, const Eigen::VectorXd& x) {
  ConstraintEval scratch;
  scratch.grad.resize(p.size());
  scratch.hess.resize(p.size(), p.size());
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& c : p.constraints) {
    if (!eval_constraint(c, x, scratch, false)) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, scratch.value - c.bound);
  }
  return worst;
}

}  // namespace

double Constraint::value(const std::vector<double>& x) const {
  ConstraintEval scratch;
  const auto n = static_cast<Eigen::Index>(x.size());
  scratch.grad.resize(n);
  scratch.hess.resize(n, n);
  const Eigen::Map<const Eigen::VectorXd> xv(x.data(), n);
  if (!eval_constraint(*this, xv, scratch, false)) return std::numeric_limits<double>::infinity();
  return scratch.value;
}

int Problem::add_variable(double lower_bound, double upper_bound, double cost_coef) {
  lower.push_back(lower_bound);
  upper.push_back(upper_bound);
  cost.push_back(cost_coef);
  return static_cast<int>(cost.size()) - 1;
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::optimal:
      return "optimal";
    case Status::infeasible:
      return "infeasible";
    case Status::numerical_failure:
      return "numerical_failure";
  }
  return "unknown";
}

Result solve(const Problem& problem, const std::vector<double>& start, const Options& options) {
  const int n = problem.size();
  Result result;
  for (int i = 0; i < n; ++i) {
    if (!(problem.lower[i] < problem.upper[i]) || !std::isfinite(problem.lower[i]) ||
        !std::isfinite(problem.upper[i])) {
      result.status = Status::infeasible;
      return result;
    }
  }

  // Strictly interior starting point for the box.
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) {
    const double lo = problem.lower[i];
    const double hi = problem.upper[i];
    const double margin = 1e-6 * (hi - lo);
    double v = start.size() == static_cast<std::size_t>(n) ? start[i] : 0.5 * (lo + hi);
    if (!std::isfinite(v)) v = 0.5 * (lo + hi);
    // Interior starts are kept as given; the margin only repairs boundary ones.
    x[i] = v > lo && v < hi ? v : std::clamp(v, lo + margin, hi - margin);
  }

  int steps = 0;
  double violation = max_violation(problem, x);
  if (!(violation < 0)) {
    Barrier phase1(problem, true);
    Eigen::VectorXd z(n + 1);
    z.head(n) = x;
    if (!std::isfinite(violation)) {
      result.status = Status::numerical_failure;
      return result;
    }
    z[n] = violation + 1.0;
    const auto feasible = [n](const Eigen::VectorXd& v) { return v[n] < 0; };
    // Keeps t * s of order one at the start.
    double t = 1.0 / z[n];
    bool found = false;
    for (;;) {
      const Centering c = center(phase1, z, t, steps, options.max_newton_steps, feasible);
      if (z[n] < 0) {
        found = true;
        break;
      }
      if (c == Centering::failed) break;
      const double gap = phase1.barrier_terms() / t;
      // Lower bound on the optimal slack is positive: provably infeasible.
      if (z[n] - gap > 0 || gap < 1e-13) break;
      t *= options.barrier_growth;
    }
    if (!found) {
      result.status = steps >= options.max_newton_steps ? Status::numerical_failure
                                                         : Status::infeasible;
      result.newton_steps = steps;
      result.x.assign(z.data(), z.data() + n);
      result.max_violation = max_violation(problem, z.head(n));
      return result;
    }
    x = z.head(n);
  }

  Barrier barrier(problem, false);
  const int m = barrier.barrier_terms();
  double t = m / std::max(std::abs(barrier.linear_objective(x)), 1e-8);
  Eigen::VectorXd centred = x;
  double centred_t = 0.0;
  for (;;) {
    const int budget = std::min(options.max_newton_steps, steps + options.max_centering_steps);
    if (center(barrier, x, t, steps, budget, nullptr) == Centering::failed) {
      // Rounding can stall the last stages; fall back to the previous centre
      // when its gap is already acceptable.
      const double obj = barrier.linear_objective(centred);
      if (centred_t > 0 &&
          m / centred_t <= options.absolute_gap + options.fallback_gap * std::abs(obj)) {
        x = centred;
        t = centred_t;
        result.status = Status::optimal;
        result.duality_gap = m / t;
      } else {
        result.status = Status::numerical_failure;
      }
      break;
    }
    centred = x;
    centred_t = t;
    const double gap = m / t;
    const double obj = barrier.linear_objective(x);
    if (gap <= options.absolute_gap + options.gap_tolerance * std::abs(obj)) {
      result.status = Status::optimal;
      result.duality_gap = gap;
      break;
    }
    t *= options.barrier_growth;
  }

  Eigen::VectorXd g;
  Eigen::MatrixXd h;
  barrier.derivatives(x, t, g, h);
  double cost_norm = 0.0;
  for (double c : problem.cost) cost_norm += c * c;
  cost_norm = std::sqrt(std::max(cost_norm, 1e-300));
  result.kkt_residual = g.norm() / (t * cost_norm);
  result.x.assign(x.data(), x.data() + n);
  result.objective = barrier.linear_objective(x);
  result.newton_steps = steps;
  result.max_violation = max_violation(problem, x);
  return result;
}

}  // namespace iiotcoop::convex
