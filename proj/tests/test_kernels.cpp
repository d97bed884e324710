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

#include <cstring>
#include <random>

#include <gtest/gtest.h>

#include "holo/kernels.hpp"
#include "holo/numerics.hpp"
#include "holo/oracle.hpp"
#include "support/oracles.hpp"
#include "support/test_util.hpp"

namespace holo {
namespace {

using kernels::Backend;

struct Buffers {
  alignas(32) double g[32];
  alignas(32) double y[32];
  alignas(32) double k[4][32];
};

Buffers random_buffers(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Buffers b;
  for (double& x : b.g) x = u(rng);
  for (double& x : b.y) x = u(rng);
  for (auto& row : b.k)
    for (double& x : row) x = u(rng);
  return b;
}

class KernelEquivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!kernels::available(Backend::kAvx2)) GTEST_SKIP() << "AVX2 kernels not available on this machine";
    avx = kernels::avx2_table();
  }
  const kernels::KernelTable& scalar = kernels::scalar_table();
  const kernels::KernelTable* avx = nullptr;
};

TEST_F(KernelEquivalence, Gemm4BitIdentical) {
  std::mt19937_64 rng(1);
  for (int n = 0; n < 2000; ++n) {
    const Buffers b = random_buffers(rng);
    alignas(32) double a[32], c[32];
    scalar.gemm4(b.g, b.y, a);
    avx->gemm4(b.g, b.y, c);
    ASSERT_EQ(std::memcmp(a, c, sizeof(a)), 0);
  }
}

TEST_F(KernelEquivalence, Gemv4BitIdentical) {
  std::mt19937_64 rng(2);
  for (int n = 0; n < 2000; ++n) {
    const Buffers b = random_buffers(rng);
    alignas(32) double a[8], c[8];
    scalar.gemv4(b.g, b.y, a);
    avx->gemv4(b.g, b.y, c);
    ASSERT_EQ(std::memcmp(a, c, sizeof(a)), 0);
  }
}

TEST_F(KernelEquivalence, AxpyAndCombineBitIdentical) {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 2000; ++n) {
    const Buffers b = random_buffers(rng);
    for (std::size_t len : {std::size_t{8}, std::size_t{32}}) {
      alignas(32) double a[32], c[32];
      scalar.waxpy(a, b.y, 0.37, b.k[0], len);
      avx->waxpy(c, b.y, 0.37, b.k[0], len);
      ASSERT_EQ(std::memcmp(a, c, len * sizeof(double)), 0);
      std::memcpy(a, b.y, sizeof(a));
      std::memcpy(c, b.y, sizeof(c));
      scalar.rk4_combine(a, b.k[0], b.k[1], b.k[2], b.k[3], 0.013, len);
      avx->rk4_combine(c, b.k[0], b.k[1], b.k[2], b.k[3], 0.013, len);
      ASSERT_EQ(std::memcmp(a, c, len * sizeof(double)), 0);
    }
  }
}

TEST_F(KernelEquivalence, IntegratorTrajectoriesBitIdentical) {
  const AbelianParams p{1.0, 0.9, 0.4};
  const HamiltonianFn h = [&](double t) { return h_abelian(p, t); };
  IntegrationSpec spec;
  spec.t_end = p.period();
  spec.steps = 3000;
  spec.sample_stride = 0;
  const StateVector psi0 = dark_state_abelian(p.theta, 0.0);
  kernels::select(Backend::kScalar);
  const Trajectory a = integrate(h, psi0, spec);
  kernels::select(Backend::kAvx2);
  const Trajectory b = integrate(h, psi0, spec);
  kernels::select_auto();
  ASSERT_EQ(std::memcmp(a.final_state().data(), b.final_state().data(), sizeof(cplx) * 3), 0);
  EXPECT_EQ(a.accumulated_phase, b.accumulated_phase);
}

TEST(KernelScalar, Gemm4MatchesComplexProduct) {
  std::mt19937_64 rng(4);
  const CMatrix a = testing::random_hermitian(rng, 4);
  const CMatrix b = testing::random_hermitian(rng, 4);
  alignas(32) double out[32];
  kernels::scalar_table().gemm4(reinterpret_cast<const double*>(a.data()), reinterpret_cast<const double*>(b.data()),
                                out);
  CMatrix c(4);
  std::memcpy(static_cast<void*>(c.data()), out, sizeof(out));
  EXPECT_LT(max_abs_diff(c, a * b), 1e-15);
}

TEST(KernelDispatch, SelectAndParse) {
  EXPECT_EQ(kernels::parse_backend("scalar"), Backend::kScalar);
  EXPECT_EQ(kernels::parse_backend("avx2"), Backend::kAvx2);
  EXPECT_HOLO_ERROR(kernels::parse_backend("sse"), ErrorKind::kInvalidArgument);
  kernels::select(Backend::kScalar);
  EXPECT_EQ(kernels::active().backend, Backend::kScalar);
  kernels::select_auto();
  EXPECT_TRUE(kernels::available(kernels::active().backend));
  EXPECT_EQ(kernels::name(Backend::kAvx2), "avx2");
}

}  // namespace
}  // namespace holo
