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

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "holo/numerics.hpp"
#include "support/oracles.hpp"
#include "support/test_util.hpp"

namespace holo {
namespace {

using testing::random_hermitian;

TEST(CMatrix, IdentityAdjointAndProduct) {
  const CMatrix a = CMatrix::from_rows({{1.0, cplx(0, 2)}, {3.0, cplx(4, -1)}});
  const CMatrix b = CMatrix::from_rows({{cplx(0, 1), 1.0}, {2.0, 0.0}});
  const CMatrix ab = a * b;
  EXPECT_EQ(ab(0, 0), cplx(0, 5));
  EXPECT_EQ(ab(0, 1), cplx(1, 0));
  EXPECT_EQ(ab(1, 0), cplx(8, 1));
  EXPECT_EQ(ab(1, 1), cplx(3, 0));
  EXPECT_EQ(a.adjoint()(0, 1), cplx(3, 0));
  EXPECT_EQ(a.adjoint()(1, 0), cplx(0, -2));
  EXPECT_EQ(max_abs_diff(CMatrix::identity(2) * a.adjoint().adjoint().adjoint().adjoint(), a), 0.0);
  EXPECT_EQ(a.trace(), cplx(5, -1));
}

TEST(CMatrix, PaddingStaysZero) {
  CMatrix a = CMatrix::identity(2);
  a += CMatrix::identity(2);
  a = a * a;
  for (int k = 0; k < 16; ++k) {
    if (k / 4 >= 2 || k % 4 >= 2) {
      EXPECT_EQ(a.data()[k], cplx(0.0));
    }
  }
}

TEST(CMatrix, SigmaAndCommutator) {
  const CMatrix s12 = sigma(3, 0, 1);
  const CMatrix s21 = sigma(3, 1, 0);
  const CMatrix c = commutator(s12, s21);
  EXPECT_EQ(c(0, 0), cplx(1.0));
  EXPECT_EQ(c(1, 1), cplx(-1.0));
  EXPECT_EQ(c(2, 2), cplx(0.0));
}

TEST(CMatrix, Norms) {
  const CMatrix shear = CMatrix::from_rows({{1.0, 1.0}, {0.0, 1.0}});
  EXPECT_NEAR(spectral_norm(shear), (1.0 + std::sqrt(5.0)) / 2.0, 1e-14);
  EXPECT_NEAR(frobenius_norm(shear), std::sqrt(3.0), 1e-15);
  const cplx d[3] = {2.0, cplx(0, -5), 1.0};
  EXPECT_NEAR(spectral_norm(CMatrix::diagonal(d)), 5.0, 1e-14);
  EXPECT_TRUE(is_hermitian(sigma(2, 0, 1) + sigma(2, 1, 0)));
  EXPECT_FALSE(is_hermitian(sigma(2, 0, 1)));
}

TEST(StateVector, InnerIsAntilinearInFirstArgument) {
  const StateVector a{cplx(0, 1), 0.0};
  const StateVector b{1.0, 0.0};
  EXPECT_EQ(inner(a, b), cplx(0, -1));
  EXPECT_EQ(inner(b, a), cplx(0, 1));
  EXPECT_NEAR(StateVector({3.0, 4.0}).norm(), 5.0, 1e-15);
  EXPECT_NEAR(StateVector({3.0, cplx(0, 4.0)}).normalized().norm(), 1.0, 1e-15);
}

TEST(Cubic, KnownRoots) {
  const auto r = solve_monic_real_cubic(MonicRealCubic{-6.0, 11.0, -6.0});
  EXPECT_NEAR(r[0], 1.0, 1e-14);
  EXPECT_NEAR(r[1], 2.0, 1e-14);
  EXPECT_NEAR(r[2], 3.0, 1e-14);
  const auto t = solve_monic_real_cubic(MonicRealCubic{-3.0, 3.0, -1.0});
  for (double x : t) EXPECT_NEAR(x, 1.0, 1e-5);
  const auto z = solve_monic_real_cubic(MonicRealCubic{0.0, -1.0, 0.0});
  EXPECT_NEAR(z[0], -1.0, 1e-15);
  EXPECT_NEAR(z[1], 0.0, 1e-15);
  EXPECT_NEAR(z[2], 1.0, 1e-15);
}

TEST(Cubic, ComplexRootsRejected) {
  EXPECT_HOLO_ERROR(solve_monic_real_cubic(MonicRealCubic{0.0, 1.0, 0.0}), ErrorKind::kComplexRootsDetected);
  EXPECT_LT(MonicRealCubic({0.0, 1.0, 0.0}).discriminant(), 0.0);
}

TEST(Cubic, RandomRealRootsMatchBisection) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  int checked = 0;
  for (int k = 0; k < 10000; ++k) {
    std::array<double, 3> roots = {u(rng), u(rng), u(rng)};
    std::sort(roots.begin(), roots.end());
    if (roots[1] - roots[0] < 1e-2 || roots[2] - roots[1] < 1e-2) continue;
    const double c2 = -(roots[0] + roots[1] + roots[2]);
    const double c1 = roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2];
    const double c0 = -roots[0] * roots[1] * roots[2];
    const auto got = solve_monic_real_cubic(MonicRealCubic{c2, c1, c0});
    // Brackets around each root from the (rounded) polynomial itself.
    const double bounds[4] = {-20.0, 0.5 * (roots[0] + roots[1]), 0.5 * (roots[1] + roots[2]), 20.0};
    for (int i = 0; i < 3; ++i) {
      const double ref = static_cast<double>(testing::bisect_cubic(c2, c1, c0, bounds[i], bounds[i + 1]));
      ASSERT_NEAR(got[i], ref, 1e-9) << "case " << k << " root " << i;
    }
    ++checked;
  }
  EXPECT_GT(checked, 9000);
}

TEST(Eigen, RandomHermitianProperties) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10000; ++k) {
    const int dim = 2 + k % 3;
    const CMatrix h = random_hermitian(rng, dim, 2.0);
    const EigenSystem es = hermitian_eigensystem(h);
    const double scale = std::max(1.0, spectral_norm(h));
    double sum = 0.0;
    for (int n = 0; n < dim; ++n) {
      if (n > 0) {
        ASSERT_LE(es.values[n - 1], es.values[n]);
      }
      sum += es.values[n];
      const StateVector v = es.vector(n);
      const StateVector r = h * v - es.values[n] * v;
      ASSERT_LT(r.norm(), 1e-12 * scale);
      for (int m = 0; m < dim; ++m) {
        const cplx o = inner(es.vector(m), v);
        ASSERT_NEAR(std::abs(o - (m == n ? 1.0 : 0.0)), 0.0, 1e-12);
      }
      // Phase convention: the largest component is real and positive.
      int big = 0;
      for (int i = 1; i < dim; ++i)
        if (std::abs(v[i]) > std::abs(v[big]) + 1e-12) big = i;
      ASSERT_GT(v[big].real(), 0.0);
      ASSERT_NEAR(v[big].imag(), 0.0, 1e-14);
    }
    ASSERT_NEAR(sum, h.trace().real(), 1e-12 * scale);
  }
}

TEST(Eigen, DegenerateSpectrum) {
  const cplx d[4] = {1.0, 1.0, -2.0, 1.0};
  const EigenSystem es = hermitian_eigensystem(CMatrix::diagonal(d));
  EXPECT_DOUBLE_EQ(es.values[0], -2.0);
  EXPECT_DOUBLE_EQ(es.values[3], 1.0);
  EXPECT_LT(unitarity_defect(es.vectors), 1e-14);
}

TEST(UnitaryExp, ExactIdentityAtZero) {
  std::mt19937_64 rng(3);
  const CMatrix h = random_hermitian(rng, 4);
  EXPECT_EQ(max_abs_diff(unitary_exp(h, 0.0), CMatrix::identity(4)), 0.0);
}

TEST(UnitaryExp, MatchesTaylorOracle) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> ut(-10.0, 10.0);
  for (int k = 0; k < 200; ++k) {
    const int dim = 2 + k % 3;
    const CMatrix h = random_hermitian(rng, dim);
    const double t = ut(rng);
    ASSERT_LT(spectral_norm(unitary_exp(h, t) - testing::taylor_exp(h, t)), 1e-11) << k;
  }
}

TEST(UnitaryExp, GroupLaw) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ut(-5.0, 5.0);
  for (int k = 0; k < 200; ++k) {
    const CMatrix h = random_hermitian(rng, 2 + k % 3);
    const double t1 = ut(rng), t2 = ut(rng);
    ASSERT_LT(spectral_norm(unitary_exp(h, t1) * unitary_exp(h, t2) - unitary_exp(h, t1 + t2)), 1e-12);
    ASSERT_LT(unitarity_defect(unitary_exp(h, t1)), 1e-13);
  }
}

TEST(UnitaryExp, RejectsNonHermitian) {
  EXPECT_HOLO_ERROR(unitary_exp(sigma(2, 0, 1), 1.0), ErrorKind::kNotHermitian);
}

TEST(WrapAngle, HalfOpenInterval) {
  EXPECT_DOUBLE_EQ(wrap_angle(kPi), kPi);
  EXPECT_DOUBLE_EQ(wrap_angle(-kPi), kPi);
  EXPECT_NEAR(wrap_angle(3 * kPi / 2), -kPi / 2, 1e-15);
  EXPECT_NEAR(wrap_angle(7.0), 7.0 - kTwoPi, 1e-15);
  EXPECT_EQ(wrap_angle(0.25), 0.25);
}

}  // namespace
}  // namespace holo
