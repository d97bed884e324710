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

// Inner-loop kernels for the RK4 oracle.
//
// Operands are interleaved complex doubles (re, im) in the padded 4x4
// row-major layout of CMatrix (32 doubles) or a 4-component state (8
// doubles). Every backend performs the same IEEE operations in the same order
// without fused multiply-add, so all backends produce bit-identical results.

#include <cstddef>
#include <string_view>

namespace holo::kernels {

enum class Backend { kScalar, kAvx2 };

struct KernelTable {
  Backend backend;
  // out = g * y for 4x4 complex g, y. out must not alias g or y.
  void (*gemm4)(const double* g, const double* y, double* out);
  // out = g * x for 4x4 complex g and 4-component x. out must not alias x.
  void (*gemv4)(const double* g, const double* x, double* out);
  // out[i] = y[i] + a * x[i], i < n
  void (*waxpy)(double* out, const double* y, double a, const double* x, std::size_t n);
  // y[i] += (h / 6) * (k1[i] + 2 k2[i] + 2 k3[i] + k4[i]), i < n
  void (*rk4_combine)(double* y, const double* k1, const double* k2, const double* k3,
                      const double* k4, double h, std::size_t n);
};

const KernelTable& scalar_table();
/// nullptr when the AVX2 variant was not compiled in.
const KernelTable* avx2_table();

bool cpu_supports_avx2();
bool available(Backend b);

/// The table used by the oracle. Chosen on first use: AVX2 when compiled in
/// and supported by the CPU, scalar otherwise. The HOLO_KERNELS environment
/// variable (scalar | avx2 | auto) overrides the automatic choice.
const KernelTable& active();

/// Forces a backend; throws holo::Error(kInvalidArgument) if unavailable.
void select(Backend b);
/// Re-runs the automatic choice.
void select_auto();

std::string_view name(Backend b);
/// Parses "scalar" / "avx2"; throws holo::Error(kInvalidArgument) otherwise.
Backend parse_backend(std::string_view s);

}  // namespace holo::kernels
