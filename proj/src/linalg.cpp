// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include <Eigen/Eigenvalues>

#include "qcorr/error.hpp"

namespace qcorr {
namespace {

void require_valid_dim(int dim) {
  if (dim < 2 || dim > ComplexMatrix::kMaxDim) {
    throw DimensionError("matrix dimension must be 2, 3 or 4, got " + std::to_string(dim));
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

void require_hermitian(const ComplexMatrix& h) {
  if (!h.is_hermitian()) {
    throw ContractViolation("matrix is not Hermitian within 1e-12");
  }
}

using EigenComplex = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor,
                                   ComplexMatrix::kMaxDim, ComplexMatrix::kMaxDim>;

EigenComplex to_eigen(const ComplexMatrix& m) {
  EigenComplex out(m.dim(), m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

// Closed form for a 2x2 Hermitian block [[a, c], [conj(c), d]].
std::array<double, 2> eigenvalues_2x2(const ComplexMatrix& h) {
  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(h(0, 1)));
  return {mean + radius, mean - radius};
}

// Descending eigenvalues through a fixed-size solver (no heap traffic).
template <int N>
std::array<double, N> fixed_eigenvalues(const ComplexMatrix& h) {
  Eigen::Matrix<Complex, N, N> m;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) m(i, j) = h(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Complex, N, N>> solver(m, Eigen::EigenvaluesOnly);
  std::array<double, N> out{};
  for (int k = 0; k < N; ++k) out[k] = solver.eigenvalues()(N - 1 - k);
  return out;
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) { require_valid_dim(dim); }

ComplexMatrix::ComplexMatrix(int dim, std::initializer_list<Complex> row_major)
    : ComplexMatrix(dim) {
  if (row_major.size() != static_cast<std::size_t>(dim * dim)) {
    throw DimensionError("expected " + std::to_string(dim * dim) + " entries, got " +
                         std::to_string(row_major.size()));
  }
  std::copy(row_major.begin(), row_major.end(), data_.begin());
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> diag) {
  ComplexMatrix m(static_cast<int>(diag.size()));
  int i = 0;
  for (const Complex& d : diag) {
    m(i, i) = d;
    ++i;
  }
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (int k = 0; k < dim_ * dim_; ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (int k = 0; k < dim_ * dim_; ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) noexcept {
  for (int k = 0; k < dim_ * dim_; ++k) data_[k] *= scalar;
  return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Complex ComplexMatrix::trace() const noexcept {
  Complex sum = 0.0;
  for (int i = 0; i < dim_; ++i) sum += (*this)(i, i);
  return sum;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  require_same_dim(*this, other);
  double worst = 0.0;
  for (int k = 0; k < dim_ * dim_; ++k) worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
  return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const noexcept {
  for (int i = 0; i < dim_; ++i) {
    for (int j = i; j < dim_; ++j) {
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    }
  }
  return true;
}

std::vector<Complex> ComplexMatrix::entries() const {
  return {data_.begin(), data_.begin() + dim_ * dim_};
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs);
  const int n = lhs.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (int j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix operator*(Complex scalar, ComplexMatrix m) { return m *= scalar; }
ComplexMatrix operator*(ComplexMatrix m, Complex scalar) { return m *= scalar; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int m = a.dim();
  const int n = b.dim();
  if (m * n > ComplexMatrix::kMaxDim) {
    throw DimensionError("kron result dimension " + std::to_string(m * n) + " exceeds 4");
  }
  ComplexMatrix out(m * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) out(i * n + k, j * n + l) = a(i, j) * b(k, l);
      }
    }
  }
  return out;
}

RealMatrix3::RealMatrix3(std::initializer_list<double> row_major) {
  if (row_major.size() != 9) {
    throw DimensionError("RealMatrix3 needs 9 entries, got " + std::to_string(row_major.size()));
  }
  std::copy(row_major.begin(), row_major.end(), data_.begin());
}

RealMatrix3 RealMatrix3::diagonal(double d0, double d1, double d2) {
  return {d0, 0.0, 0.0, 0.0, d1, 0.0, 0.0, 0.0, d2};
}

RealMatrix3 RealMatrix3::outer(const std::array<double, 3>& u, const std::array<double, 3>& v) {
  RealMatrix3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out(i, j) = u[i] * v[j];
  }
  return out;
}

RealMatrix3 RealMatrix3::transpose() const noexcept {
  RealMatrix3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

std::array<double, 3> RealMatrix3::apply(const std::array<double, 3>& v) const noexcept {
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

double RealMatrix3::max_abs_diff(const RealMatrix3& other) const noexcept {
  double worst = 0.0;
  for (int k = 0; k < 9; ++k) worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
  return worst;
}

RealMatrix3& RealMatrix3::operator-=(const RealMatrix3& other) noexcept {
  for (int k = 0; k < 9; ++k) data_[k] -= other.data_[k];
  return *this;
}

RealMatrix3 operator*(const RealMatrix3& a, const RealMatrix3& b) noexcept {
  RealMatrix3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  require_hermitian(h);
  std::vector<double> out;
  switch (h.dim()) {
    case 2: {
      const auto ev = eigenvalues_2x2(h);
      out.assign(ev.begin(), ev.end());
      break;
    }
    case 3: {
      const auto ev = fixed_eigenvalues<3>(h);
      out.assign(ev.begin(), ev.end());
      break;
    }
    default: {
      const auto ev = fixed_eigenvalues<4>(h);
      out.assign(ev.begin(), ev.end());
      break;
    }
  }
  return out;
}

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& h) {
  require_hermitian(h);
  Eigen::SelfAdjointEigenSolver<EigenComplex> solver(to_eigen(h), Eigen::ComputeEigenvectors);
  const int n = h.dim();
  HermitianEigensystem out;
  // Eigen returns ascending order.
  for (int k = n - 1; k >= 0; --k) {
    out.values.push_back(solver.eigenvalues()(k));
    std::vector<Complex> v(n);
    for (int i = 0; i < n; ++i) v[i] = solver.eigenvectors()(i, k);
    out.vectors.push_back(std::move(v));
  }
  return out;
}

double trace_norm_hermitian(const ComplexMatrix& h) {
  require_hermitian(h);
  double sum = 0.0;
  auto accumulate = [&sum](const auto& ev) {
    for (double v : ev) sum += std::abs(v);
  };
  switch (h.dim()) {
    case 2: accumulate(eigenvalues_2x2(h)); break;
    case 3: accumulate(fixed_eigenvalues<3>(h)); break;
    default: accumulate(fixed_eigenvalues<4>(h)); break;
  }
  return sum;
}

SingularValues3 singular_values_3(const RealMatrix3& q) {
  const RealMatrix3 gram = q.transpose() * q;
  Eigen::Matrix3d g;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) g(i, j) = gram(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(g, Eigen::EigenvaluesOnly);
  SingularValues3 t{};
  for (int k = 0; k < 3; ++k) {
    // Gram eigenvalues are >= 0 up to rounding; clamp the tiny negatives.
    t[k] = std::sqrt(std::max(0.0, solver.eigenvalues()(2 - k)));
  }
  return t;
}

}  // namespace qcorr
