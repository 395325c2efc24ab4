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

#include "iiotcoop/ris_phases.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "iiotcoop/protocol.hpp"
#include "iiotcoop/rng.hpp"

namespace iiotcoop {

std::vector<cdouble> ris_phases_closed_form(cdouble h_d, std::span<const cdouble> u) {
  const double phi0 = std::arg(h_d);
  std::vector<cdouble> v(u.size());
  for (std::size_t q = 0; q < u.size(); ++q) {
    v[q] = u[q] == cdouble{} ? cdouble{1.0, 0.0} : std::polar(1.0, phi0 + std::arg(u[q]));
  }
  return v;
}

PhaseResult ris_phases_sca(cdouble h_d, std::span<const cdouble> u, std::span<const cdouble> v_init,
                           double tol, int max_iter) {
  PhaseResult result;
  result.v.assign(v_init.begin(), v_init.end());
  cdouble h = ris_effective_channel(h_d, u, result.v);
  result.gain_trace.push_back(std::abs(h));
  for (int it = 0; it < max_iter; ++it) {
    std::vector<cdouble> next(u.size());
    for (std::size_t q = 0; q < u.size(); ++q) {
      const cdouble z = u[q] * h;
      next[q] = z == cdouble{} ? result.v[q] : std::polar(1.0, std::arg(z));
    }
    const cdouble h_next = ris_effective_channel(h_d, u, next);
    const double prev = result.gain_trace.back();
    const double gain = std::abs(h_next);
    ++result.iterations;
    if (gain < prev) {
      result.converged = true;
      break;
    }
    result.v = std::move(next);
    h = h_next;
    result.gain_trace.push_back(gain);
    if (gain - prev <= tol * std::max(gain, 1e-300)) {
      result.converged = true;
      break;
    }
  }
  return result;
}

std::vector<cdouble> ris_phases_random(std::size_t q, std::uint64_t master_seed,
                                       std::uint64_t trial_index, std::uint64_t device) {
  auto engine = make_engine(master_seed, trial_index, Stream::ris_phases, device);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::vector<cdouble> v(q);
  for (auto& x : v) x = std::polar(1.0, phase(engine));
  return v;
}

}  // namespace iiotcoop
