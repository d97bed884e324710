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

namespace holo {

/// Numerical thresholds shared by every module. Functions that test one of
/// these accept a `Tolerances` argument defaulting to `kDefaultTolerances`.
struct Tolerances {
  // max |A - A^dagger| entrywise for a matrix to count as Hermitian
  double hermitian = 1e-12;
  // | ||psi|| - 1 | for states crossing module boundaries
  double unit_norm = 1e-9;
  // cubic discriminant may dip this far below zero and still be treated as real-rooted
  double cubic_discriminant = 1e-12;
  // |x0 - x_{+-}| below this makes the middle invariant eigenvalue ambiguous
  double degenerate_root = 1e-10;
  // eigenvector phase convention: components this close in magnitude count as tied
  double phase_tie = 1e-12;
  // allowed norm drift of an RK4 trajectory
  double unitarity = 1e-8;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace holo
