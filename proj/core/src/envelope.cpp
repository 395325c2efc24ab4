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

#include "iiotcoop/envelope.hpp"

namespace iiotcoop {

double theta_lower(double x, double y, double x_anchor, double y_anchor) {
  const double s = x_anchor + y_anchor;
  const double d = x - y;
  return 0.5 * s * (x + y) - 0.25 * s * s - 0.25 * d * d;
}

double theta_upper(double x, double y, double x_anchor, double y_anchor) {
  const double s = x + y;
  const double d = x_anchor - y_anchor;
  return 0.25 * s * s + 0.25 * d * d - 0.5 * d * (x - y);
}

}  // namespace iiotcoop
