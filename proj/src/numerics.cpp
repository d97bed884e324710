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

#include "holo/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "holo/errors.hpp"

namespace holo {

namespace {

void check_dim(int dim) {
  if (dim < 2 || dim > CMatrix::kMaxDim) {
    throw Error(ErrorKind::kInvalidArgument, "dimension must be 2, 3 or 4, got " + std::to_string(dim));
  }
}

void check_same_dim(int a, int b) {
  if (a != b) {
    throw Error(ErrorKind::kInvalidArgument,
                "dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

CMatrix hermitian_part(const CMatrix& a) {
  CMatrix h(a.dim());
  for (int r = 0; r < a.dim(); ++r) {
    h(r, r) = cplx(a(r, r).real(), 0.0);
    for (int c = r + 1; c < a.dim(); ++c) {
      const cplx v = 0.5 * (a(r, c) + std::conj(a(c, r)));
      h(r, c) = v;
      h(c, r) = std::conj(v);
    }
  }
  return h;
}

// Jacobi sweeps on an already Hermitian matrix. Returns eigenvalues in
// diagonal order (unsorted) and accumulates the rotations into `v`.
void jacobi(CMatrix& a, CMatrix& v) {
  const int n = a.dim();
  const double scale = frobenius_norm(a);
  if (scale == 0.0) return;
  const double stop = (1e-17 * scale) * (1e-17 * scale);
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (off <= stop) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const cplx phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // J = 1 except J(p,p) = J(q,q) = c, J(p,q) = s e^{i phi}, J(q,p) = -s e^{-i phi};
        // J^dagger A J has a zero (p,q) entry.
        const cplx jpq = s * phase;
        const cplx jqp = -s * std::conj(phase);

        // A <- A J (columns p, q)
        for (int r = 0; r < n; ++r) {
          const cplx arp = a(r, p);
          const cplx arq = a(r, q);
          a(r, p) = arp * c + arq * jqp;
          a(r, q) = arp * jpq + arq * c;
        }
        // A <- J^dagger A (rows p, q)
        for (int col = 0; col < n; ++col) {
          const cplx apc = a(p, col);
          const cplx aqc = a(q, col);
          a(p, col) = c * apc + std::conj(jqp) * aqc;
          a(q, col) = std::conj(jpq) * apc + c * aqc;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = cplx(a(p, p).real(), 0.0);
        a(q, q) = cplx(a(q, q).real(), 0.0);
        // V <- V J
        for (int r = 0; r < n; ++r) {
          const cplx vrp = v(r, p);
          const cplx vrq = v(r, q);
          v(r, p) = vrp * c + vrq * jqp;
          v(r, q) = vrp * jpq + vrq * c;
        }
      }
    }
  }
}

EigenSystem eigensystem_unchecked(const CMatrix& h, const Tolerances& tol) {
  const int n = h.dim();
  CMatrix a = hermitian_part(h);
  CMatrix v = CMatrix::identity(n);
  jacobi(a, v);

  std::array<int, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.begin() + n,
                   [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem es;
  es.vectors = CMatrix(n);
  for (int k = 0; k < n; ++k) {
    const int src = order[k];
    es.values[k] = a(src, src).real();

    double max_mag = 0.0;
    for (int r = 0; r < n; ++r) max_mag = std::max(max_mag, std::abs(v(r, src)));
    int pivot = 0;
    for (int r = 0; r < n; ++r) {
      if (std::abs(v(r, src)) >= max_mag - tol.phase_tie) {
        pivot = r;
        break;
      }
    }
    const cplx pv = v(pivot, src);
    const cplx rephase = std::conj(pv) / std::abs(pv);
    for (int r = 0; r < n; ++r) es.vectors(r, k) = v(r, src) * rephase;
    es.vectors(pivot, k) = cplx(std::abs(es.vectors(pivot, k)), 0.0);
  }
  return es;
}

}  // namespace

// ---------------------------------------------------------------------------
// CMatrix

CMatrix::CMatrix(int dim) : dim_(dim) { check_dim(dim); }

CMatrix CMatrix::identity(int dim) {
  CMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const cplx> diag) {
  CMatrix m(static_cast<int>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) m(int(i), int(i)) = diag[i];
  return m;
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  CMatrix m(static_cast<int>(rows.size()));
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != m.dim()) {
      throw Error(ErrorKind::kInvalidArgument, "from_rows: matrix must be square");
    }
    int c = 0;
    for (const cplx& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) m(r, c) = std::conj((*this)(c, r));
  return m;
}

cplx CMatrix::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  check_same_dim(dim_, o.dim_);
  for (int i = 0; i < 16; ++i) a_[i] += o.a_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  check_same_dim(dim_, o.dim_);
  for (int i = 0; i < 16; ++i) a_[i] -= o.a_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& x : a_) x *= s;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  check_same_dim(a.dim(), b.dim());
  const int n = a.dim();
  CMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      cplx s = 0.0;
      for (int k = 0; k < n; ++k) s += a(r, k) * b(k, c);
      m(r, c) = s;
    }
  return m;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

CMatrix sigma(int dim, int row, int col) {
  CMatrix m(dim);
  if (row < 0 || row >= dim || col < 0 || col >= dim) {
    throw Error(ErrorKind::kInvalidArgument, "sigma: level index out of range");
  }
  m(row, col) = 1.0;
  return m;
}

double max_abs_entry(const CMatrix& a) {
  double m = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) m = std::max(m, std::abs(a(r, c)));
  return m;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) { return max_abs_entry(a - b); }

double frobenius_norm(const CMatrix& a) {
  double s = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

double spectral_norm(const CMatrix& a) {
  const EigenSystem es = eigensystem_unchecked(a.adjoint() * a, kDefaultTolerances);
  return std::sqrt(std::max(0.0, es.values[a.dim() - 1]));
}

bool is_hermitian(const CMatrix& a, double tol) {
  for (int r = 0; r < a.dim(); ++r)
    for (int c = r; c < a.dim(); ++c)
      if (!(std::abs(a(r, c) - std::conj(a(c, r))) < tol)) return false;
  return true;
}

double unitarity_defect(const CMatrix& u) {
  return spectral_norm(u.adjoint() * u - CMatrix::identity(u.dim()));
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(int dim) : dim_(dim) { check_dim(dim); }

StateVector::StateVector(std::initializer_list<cplx> amps) : dim_(static_cast<int>(amps.size())) {
  check_dim(dim_);
  std::copy(amps.begin(), amps.end(), v_.begin());
}

StateVector StateVector::basis(int dim, int index) {
  StateVector s(dim);
  if (index < 0 || index >= dim) throw Error(ErrorKind::kInvalidArgument, "basis index out of range");
  s[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double s = 0.0;
  for (int i = 0; i < dim_; ++i) s += std::norm(v_[i]);
  return std::sqrt(s);
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw Error(ErrorKind::kInvalidArgument, "cannot normalize the zero vector");
  StateVector s = *this;
  s *= 1.0 / n;
  return s;
}

StateVector& StateVector::operator+=(const StateVector& o) {
  check_same_dim(dim_, o.dim_);
  for (int i = 0; i < 4; ++i) v_[i] += o.v_[i];
  return *this;
}

StateVector& StateVector::operator*=(cplx s) {
  for (auto& x : v_) x *= s;
  return *this;
}

StateVector operator*(const CMatrix& m, const StateVector& v) {
  check_same_dim(m.dim(), v.dim());
  StateVector out(v.dim());
  for (int r = 0; r < v.dim(); ++r) {
    cplx s = 0.0;
    for (int c = 0; c < v.dim(); ++c) s += m(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
StateVector operator-(StateVector a, const StateVector& b) { return a += cplx(-1.0) * b; }
StateVector operator*(cplx s, StateVector v) { return v *= s; }

cplx inner(const StateVector& a, const StateVector& b) {
  check_same_dim(a.dim(), b.dim());
  cplx s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

CMatrix outer(const StateVector& a, const StateVector& b) {
  check_same_dim(a.dim(), b.dim());
  CMatrix m(a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) m(r, c) = a[r] * std::conj(b[c]);
  return m;
}

double distance(const StateVector& a, const StateVector& b) { return (a - b).norm(); }

// ---------------------------------------------------------------------------
// Cubic

double MonicRealCubic::discriminant() const {
  const double b = c2, c = c1, d = c0;
  return 18.0 * b * c * d - 4.0 * b * b * b * d + b * b * c * c - 4.0 * c * c * c - 27.0 * d * d;
}

std::array<double, 3> solve_monic_real_cubic(const MonicRealCubic& p, const Tolerances& tol) {
  if (!std::isfinite(p.c2) || !std::isfinite(p.c1) || !std::isfinite(p.c0)) {
    throw Error(ErrorKind::kInvalidArgument, "cubic coefficients must be finite");
  }
  const double disc = p.discriminant();
  if (disc < -tol.cubic_discriminant) {
    std::ostringstream msg;
    msg << "discriminant " << disc << " < 0";
    throw Error(ErrorKind::kComplexRootsDetected, msg.str());
  }

  // Depressed form y^3 + a y + b with x = y - c2/3.
  const double shift = p.c2 / 3.0;
  const double a = p.c1 - p.c2 * shift;
  const double b = (2.0 * p.c2 * p.c2 * p.c2) / 27.0 - p.c2 * p.c1 / 3.0 + p.c0;

  std::array<double, 3> roots{};
  if (a >= 0.0) {
    // Only a (near-)triple root is compatible with three real roots here.
    const double y = std::cbrt(-b);
    roots = {y - shift, y - shift, y - shift};
  } else {
    const double m = 2.0 * std::sqrt(-a / 3.0);
    const double arg = std::clamp(3.0 * b / (a * m), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) roots[k] = m * std::cos(phi - kTwoPi * k / 3.0) - shift;
  }

  // Newton polish, keeping a step only if it lowers the residual.
  for (double& r : roots) {
    for (int it = 0; it < 3; ++it) {
      const double f = p(r);
      const double df = p.derivative(r);
      if (f == 0.0 || df == 0.0) break;
      const double cand = r - f / df;
      if (std::abs(p(cand)) < std::abs(f)) {
        r = cand;
      } else {
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// ---------------------------------------------------------------------------
// Eigen / exponential

StateVector EigenSystem::vector(int k) const {
  StateVector s(dim());
  for (int r = 0; r < dim(); ++r) s[r] = vectors(r, k);
  return s;
}

EigenSystem hermitian_eigensystem(const CMatrix& h, const Tolerances& tol) {
  if (!is_hermitian(h, tol.hermitian)) {
    std::ostringstream msg;
    msg << "max |A - A^dagger| = " << max_abs_diff(h, h.adjoint());
    throw Error(ErrorKind::kNotHermitian, msg.str());
  }
  return eigensystem_unchecked(h, tol);
}

CMatrix unitary_exp(const CMatrix& h, double t, const Tolerances& tol) {
  if (!is_hermitian(h, tol.hermitian)) {
    throw Error(ErrorKind::kNotHermitian, "unitary_exp requires a Hermitian generator");
  }
  const int n = h.dim();
  if (t == 0.0) return CMatrix::identity(n);
  const EigenSystem es = eigensystem_unchecked(h, tol);
  CMatrix u(n);
  for (int k = 0; k < n; ++k) {
    const cplx ph = std::polar(1.0, -es.values[k] * t);
    for (int r = 0; r < n; ++r) {
      const cplx vr = es.vectors(r, k) * ph;
      for (int c = 0; c < n; ++c) u(r, c) += vr * std::conj(es.vectors(c, k));
    }
  }
  return u;
}

double wrap_angle(double a) {
  double w = std::remainder(a, kTwoPi);
  if (w <= -kPi) w += kTwoPi;
  return w;
}

}  // namespace holo
