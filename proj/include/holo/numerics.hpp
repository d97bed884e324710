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

// Dense complex linear algebra for the 2..4 dimensional level spaces used by
// the loop models, plus the real cubic solver behind the invariant spectrum.

#include <array>
#include <complex>
#include <initializer_list>
#include <span>

#include "holo/tolerances.hpp"

namespace holo {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Square complex matrix of dimension 2, 3 or 4.
///
/// Storage is always a 4x4 row-major block (stride 4) with the unused rows and
/// columns held at zero, so the SIMD kernels can treat every matrix as 4x4.
class CMatrix {
 public:
  static constexpr int kMaxDim = 4;
  static constexpr int kStride = 4;

  explicit CMatrix(int dim);

  static CMatrix zero(int dim) { return CMatrix(dim); }
  static CMatrix identity(int dim);
  static CMatrix diagonal(std::span<const cplx> diag);
  static CMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

  int dim() const noexcept { return dim_; }

  cplx& operator()(int r, int c) { return a_[r * kStride + c]; }
  const cplx& operator()(int r, int c) const { return a_[r * kStride + c]; }

  // Padded 4x4 view, 16 complex entries.
  const cplx* data() const noexcept { return a_.data(); }
  cplx* data() noexcept { return a_.data(); }

  CMatrix adjoint() const;
  cplx trace() const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);

 private:
  int dim_;
  alignas(32) std::array<cplx, 16> a_{};
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, CMatrix a);
CMatrix commutator(const CMatrix& a, const CMatrix& b);

/// Matrix with a single 1 at (row, col): the level transition operator sigma_{row,col}.
CMatrix sigma(int dim, int row, int col);

double max_abs_entry(const CMatrix& a);
double max_abs_diff(const CMatrix& a, const CMatrix& b);
double frobenius_norm(const CMatrix& a);
double spectral_norm(const CMatrix& a);
bool is_hermitian(const CMatrix& a, double tol = kDefaultTolerances.hermitian);
/// ||U^dagger U - 1|| in spectral norm.
double unitarity_defect(const CMatrix& u);

/// Complex amplitude vector over a level basis of dimension 2..4.
class StateVector {
 public:
  explicit StateVector(int dim);
  StateVector(std::initializer_list<cplx> amps);

  static StateVector basis(int dim, int index);

  int dim() const noexcept { return dim_; }
  cplx& operator[](int i) { return v_[i]; }
  const cplx& operator[](int i) const { return v_[i]; }
  const cplx* data() const noexcept { return v_.data(); }
  cplx* data() noexcept { return v_.data(); }

  double norm() const;
  StateVector normalized() const;

  StateVector& operator+=(const StateVector& o);
  StateVector& operator*=(cplx s);

 private:
  int dim_;
  alignas(32) std::array<cplx, 4> v_{};
};

StateVector operator*(const CMatrix& m, const StateVector& v);
StateVector operator+(StateVector a, const StateVector& b);
StateVector operator-(StateVector a, const StateVector& b);
StateVector operator*(cplx s, StateVector v);
/// <a|b>, antilinear in the first argument.
cplx inner(const StateVector& a, const StateVector& b);
/// |a><b|
CMatrix outer(const StateVector& a, const StateVector& b);
double distance(const StateVector& a, const StateVector& b);

/// x^3 + c2 x^2 + c1 x + c0
struct MonicRealCubic {
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;

  double operator()(double x) const { return ((x + c2) * x + c1) * x + c0; }
  double derivative(double x) const { return (3.0 * x + 2.0 * c2) * x + c1; }
  /// Discriminant 18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2 with a = 1.
  double discriminant() const;
};

/// Three real roots in ascending order. Throws kComplexRootsDetected when the
/// discriminant is below -tol.cubic_discriminant.
std::array<double, 3> solve_monic_real_cubic(const MonicRealCubic& p,
                                             const Tolerances& tol = kDefaultTolerances);

struct EigenSystem {
  std::array<double, 4> values{};  // ascending, first dim() entries used
  CMatrix vectors{2};              // column k is the eigenvector of values[k]

  int dim() const noexcept { return vectors.dim(); }
  StateVector vector(int k) const;
};

/// Eigen-decomposition of a Hermitian matrix (cyclic complex Jacobi).
///
/// Eigenvalues ascend. Each eigenvector is rephased so that its
/// largest-magnitude component (lowest index among ties within
/// tol.phase_tie) is real and positive.
EigenSystem hermitian_eigensystem(const CMatrix& h, const Tolerances& tol = kDefaultTolerances);

/// exp(-i H t) for Hermitian H; exactly the identity at t == 0.
CMatrix unitary_exp(const CMatrix& h, double t, const Tolerances& tol = kDefaultTolerances);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

}  // namespace holo
