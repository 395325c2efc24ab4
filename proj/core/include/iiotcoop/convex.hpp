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

#include <string_view>
#include <utility>
#include <vector>

namespace iiotcoop::convex {

/// coef * x[var].
struct LinearTerm {
  int var;
  double coef;
};

/// coef / x[var] with coef >= 0; requires x[var] > 0 on the box.
struct ReciprocalTerm {
  int var;
  double coef;
};

/// coef * 2^(scale * x[var]) with coef >= 0.
struct ExponentialTerm {
  int var;
  double coef;
  double scale = 1.0;
};

/// coef * (offset + sum_j w_j x[j])^2 with coef >= 0.
struct SquareTerm {
  std::vector<std::pair<int, double>> weights;
  double offset = 0.0;
  double coef = 1.0;
};

/// Smooth convex inequality f(x) <= bound.
struct Constraint {
  std::vector<LinearTerm> linear;
  std::vector<ReciprocalTerm> reciprocal;
  std::vector<ExponentialTerm> exponential;
  std::vector<SquareTerm> square;
  double constant = 0.0;
  double bound = 0.0;

  [[nodiscard]] double value(const std::vector<double>& x) const;
};

/// minimize cost^T x subject to lower < x < upper and every constraint.
/// All bounds must be finite with lower < upper.
struct Problem {
  std::vector<double> cost;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<Constraint> constraints;

  int add_variable(double lower_bound, double upper_bound, double cost_coef = 0.0);
  [[nodiscard]] int size() const { return static_cast<int>(cost.size()); }
};

enum class Status { optimal, infeasible, numerical_failure };

std::string_view to_string(Status status);

struct Options {
  double gap_tolerance = 1e-10;   // relative duality-gap target
  double absolute_gap = 1e-14;
  double barrier_growth = 20.0;
  int max_newton_steps = 400;
  int max_centering_steps = 60;  // per barrier stage
  /// Relative gap accepted when a late stage stalls in rounding.
  double fallback_gap = 1e-8;
};

struct Result {
  Status status = Status::numerical_failure;
  std::vector<double> x;
  double objective = 0.0;
  int newton_steps = 0;
  double duality_gap = 0.0;
  /// Stationarity residual of the barrier KKT system at the returned point,
  /// scaled by the cost norm.
  double kkt_residual = 0.0;
  /// Largest value of f_i(x) - bound_i (negative when strictly feasible).
  double max_violation = 0.0;
};

/// Log-barrier interior-point method with damped Newton steps. `start` may
/// be empty or infeasible; a phase-I problem is solved when needed.
Result solve(const Problem& problem, const std::vector<double>& start = {},
             const Options& options = {});

}  // namespace iiotcoop::convex
