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
#include <span>
#include <vector>

#include "iiotcoop/scenario.hpp"

namespace iiotcoop {

/// Phases aligning every reflected path with the direct one:
/// v_q = exp(j (arg h_d + arg u_q)), so |h_d + u^H v| = |h_d| + sum |u_q|.
/// Zero entries of u get phase 0.
std::vector<cdouble> ris_phases_closed_form(cdouble h_d, std::span<const cdouble> u);

struct PhaseResult {
  std::vector<cdouble> v;
  std::vector<double> gain_trace;  // |h_d + u^H v| per iterate, starting at v_init
  int iterations = 0;
  bool converged = false;
};

/// Fixed-point ascent v <- exp(j arg(u (h_d + u^H v))) until the gain
/// changes by less than tol (relative) or max_iter is reached.
PhaseResult ris_phases_sca(cdouble h_d, std::span<const cdouble> u, std::span<const cdouble> v_init,
                           double tol = 1e-12, int max_iter = 1000);

/// Independent uniform phases.
std::vector<cdouble> ris_phases_random(std::size_t q, std::uint64_t master_seed,
                                       std::uint64_t trial_index, std::uint64_t device);

}  // namespace iiotcoop
