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

#include "holo/kernels.hpp"

namespace holo::kernels {

namespace {

// The AVX2 variant forms each complex product as
//   (a.re*b.re - a.im*b.im, a.re*b.im + a.im*b.re)
// and accumulates into a zero-initialised register in k order. Keep the
// scalar code in exactly that shape.

void gemm4_scalar(const double* g, const double* y, double* out) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double re = 0.0;
      double im = 0.0;
      for (int k = 0; k < 4; ++k) {
        const double ar = g[8 * i + 2 * k];
        const double ai = g[8 * i + 2 * k + 1];
        const double br = y[8 * k + 2 * j];
        const double bi = y[8 * k + 2 * j + 1];
        const double pr = ar * br - ai * bi;
        const double pi = ar * bi + ai * br;
        re = re + pr;
        im = im + pi;
      }
      out[8 * i + 2 * j] = re;
      out[8 * i + 2 * j + 1] = im;
    }
  }
}

void gemv4_scalar(const double* g, const double* x, double* out) {
  for (int i = 0; i < 4; ++i) {
    double pr[4];
    double pi[4];
    for (int k = 0; k < 4; ++k) {
      const double ar = g[8 * i + 2 * k];
      const double ai = g[8 * i + 2 * k + 1];
      const double br = x[2 * k];
      const double bi = x[2 * k + 1];
      pr[k] = ar * br - ai * bi;
      pi[k] = ar * bi + ai * br;
    }
    // (p0 + p2) + (p1 + p3): the lane-pair reduction order of the vector path.
    out[2 * i] = (pr[0] + pr[2]) + (pr[1] + pr[3]);
    out[2 * i + 1] = (pi[0] + pi[2]) + (pi[1] + pi[3]);
  }
}

void waxpy_scalar(double* out, const double* y, double a, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = y[i] + a * x[i];
}

void rk4_combine_scalar(double* y, const double* k1, const double* k2, const double* k3,
                        const double* k4, double h, std::size_t n) {
  const double c = h / 6.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = k1[i] + 2.0 * k2[i];
    s = s + 2.0 * k3[i];
    s = s + k4[i];
    y[i] = y[i] + c * s;
  }
}

constexpr KernelTable kScalarTable{Backend::kScalar, gemm4_scalar, gemv4_scalar, waxpy_scalar,
                                   rk4_combine_scalar};

}  // namespace

const KernelTable& scalar_table() { return kScalarTable; }

}  // namespace holo::kernels
