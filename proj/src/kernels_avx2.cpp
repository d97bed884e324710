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

// Compiled with -mavx2 -ffp-contract=off; only reached after a runtime CPU check.

#include <immintrin.h>

#include "holo/kernels.hpp"

namespace holo::kernels {

namespace {

// Two complex products a*b per register, lanes (re, im, re, im).
inline __m256d cmul2(__m256d a, __m256d b) {
  const __m256d a_re = _mm256_movedup_pd(a);
  const __m256d a_im = _mm256_permute_pd(a, 0xF);
  const __m256d b_sw = _mm256_permute_pd(b, 0x5);
  return _mm256_addsub_pd(_mm256_mul_pd(a_re, b), _mm256_mul_pd(a_im, b_sw));
}

void gemm4_avx2(const double* g, const double* y, double* out) {
  __m256d y_lo[4], y_hi[4], ys_lo[4], ys_hi[4];
  for (int k = 0; k < 4; ++k) {
    y_lo[k] = _mm256_loadu_pd(y + 8 * k);
    y_hi[k] = _mm256_loadu_pd(y + 8 * k + 4);
    ys_lo[k] = _mm256_permute_pd(y_lo[k], 0x5);
    ys_hi[k] = _mm256_permute_pd(y_hi[k], 0x5);
  }
  for (int i = 0; i < 4; ++i) {
    __m256d acc_lo = _mm256_setzero_pd();
    __m256d acc_hi = _mm256_setzero_pd();
    for (int k = 0; k < 4; ++k) {
      const __m256d re = _mm256_broadcast_sd(g + 8 * i + 2 * k);
      const __m256d im = _mm256_broadcast_sd(g + 8 * i + 2 * k + 1);
      const __m256d p_lo = _mm256_addsub_pd(_mm256_mul_pd(re, y_lo[k]), _mm256_mul_pd(im, ys_lo[k]));
      const __m256d p_hi = _mm256_addsub_pd(_mm256_mul_pd(re, y_hi[k]), _mm256_mul_pd(im, ys_hi[k]));
      acc_lo = _mm256_add_pd(acc_lo, p_lo);
      acc_hi = _mm256_add_pd(acc_hi, p_hi);
    }
    _mm256_storeu_pd(out + 8 * i, acc_lo);
    _mm256_storeu_pd(out + 8 * i + 4, acc_hi);
  }
}

void gemv4_avx2(const double* g, const double* x, double* out) {
  const __m256d x_lo = _mm256_loadu_pd(x);
  const __m256d x_hi = _mm256_loadu_pd(x + 4);
  for (int i = 0; i < 4; ++i) {
    const __m256d p_lo = cmul2(_mm256_loadu_pd(g + 8 * i), x_lo);
    const __m256d p_hi = cmul2(_mm256_loadu_pd(g + 8 * i + 4), x_hi);
    const __m256d s = _mm256_add_pd(p_lo, p_hi);
    const __m128d r = _mm_add_pd(_mm256_castpd256_pd128(s), _mm256_extractf128_pd(s, 1));
    _mm_storeu_pd(out + 2 * i, r);
  }
}

void waxpy_avx2(double* out, const double* y, double a, const double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r = _mm256_add_pd(_mm256_loadu_pd(y + i), _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    _mm256_storeu_pd(out + i, r);
  }
  for (; i < n; ++i) out[i] = y[i] + a * x[i];
}

void rk4_combine_avx2(double* y, const double* k1, const double* k2, const double* k3,
                      const double* k4, double h, std::size_t n) {
  const double c = h / 6.0;
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d s = _mm256_add_pd(_mm256_loadu_pd(k1 + i), _mm256_mul_pd(two, _mm256_loadu_pd(k2 + i)));
    s = _mm256_add_pd(s, _mm256_mul_pd(two, _mm256_loadu_pd(k3 + i)));
    s = _mm256_add_pd(s, _mm256_loadu_pd(k4 + i));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), _mm256_mul_pd(vc, s)));
  }
  for (; i < n; ++i) {
    double s = k1[i] + 2.0 * k2[i];
    s = s + 2.0 * k3[i];
    s = s + k4[i];
    y[i] = y[i] + c * s;
  }
}

constexpr KernelTable kAvx2Table{Backend::kAvx2, gemm4_avx2, gemv4_avx2, waxpy_avx2, rk4_combine_avx2};

}  // namespace

const KernelTable* avx2_table_impl() { return &kAvx2Table; }

}  // namespace holo::kernels
