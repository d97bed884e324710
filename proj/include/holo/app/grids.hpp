// Copyright 2026 The Holonomy Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

namespace holo::app {

/// n points from a to b inclusive; n = 1 gives {a}.
inline std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[k] = n == 1 ? a : a + (b - a) * (static_cast<double>(k) / (n - 1));
  return v;
}

/// n points strictly inside (a, b), evenly spaced.
inline std::vector<double> interior(double a, double b, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[k] = a + (b - a) * (static_cast<double>(k + 1) / (n + 1));
  return v;
}

}  // namespace holo::app
