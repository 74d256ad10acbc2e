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

#pragma once

#include <array>
#include <complex>
#include <initializer_list>
#include <vector>

namespace qcorr {

using Complex = std::complex<double>;

/// Entry-wise tolerance used for every Hermiticity check in the library.
inline constexpr double kHermitianTol = 1e-12;

/// Dense square complex matrix of dimension 2, 3 or 4, stored row-major.
class ComplexMatrix {
 public:
  static constexpr int kMaxDim = 4;

  explicit ComplexMatrix(int dim);
  ComplexMatrix(int dim, std::initializer_list<Complex> row_major);

  static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }
  static ComplexMatrix identity(int dim);
  static ComplexMatrix diagonal(std::initializer_list<Complex> diag);

  int dim() const noexcept { return dim_; }

  Complex& operator()(int row, int col) noexcept { return data_[row * dim_ + col]; }
  const Complex& operator()(int row, int col) const noexcept {
    return data_[row * dim_ + col];
  }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar) noexcept;

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const noexcept;

  /// Largest absolute entry-wise difference; dimensions must match.
  double max_abs_diff(const ComplexMatrix& other) const;
  bool is_hermitian(double tol = kHermitianTol) const noexcept;

  /// Entries in row-major order, dim*dim of them.
  std::vector<Complex> entries() const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  int dim_;
  std::array<Complex, kMaxDim * kMaxDim> data_{};
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scalar);

/// Kronecker product; the result dimension m*n must not exceed 4.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Real 3x3 matrix, row-major.
class RealMatrix3 {
 public:
  RealMatrix3() = default;
  RealMatrix3(std::initializer_list<double> row_major);

  static RealMatrix3 diagonal(double d0, double d1, double d2);
  static RealMatrix3 outer(const std::array<double, 3>& u, const std::array<double, 3>& v);

  double& operator()(int row, int col) noexcept { return data_[row * 3 + col]; }
  double operator()(int row, int col) const noexcept { return data_[row * 3 + col]; }

  RealMatrix3 transpose() const noexcept;
  std::array<double, 3> apply(const std::array<double, 3>& v) const noexcept;
  double max_abs_diff(const RealMatrix3& other) const noexcept;

  RealMatrix3& operator-=(const RealMatrix3& other) noexcept;
  friend RealMatrix3 operator*(const RealMatrix3& a, const RealMatrix3& b) noexcept;
  friend bool operator==(const RealMatrix3&, const RealMatrix3&) = default;

 private:
  std::array<double, 9> data_{};
};

using SingularValues3 = std::array<double, 3>;

/// Eigenvalues of a Hermitian matrix, sorted descending. Throws
/// ContractViolation if `h` deviates from Hermitian by more than 1e-12.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

struct HermitianEigensystem {
  std::vector<double> values;                // descending
  std::vector<std::vector<Complex>> vectors;  // vectors[k] pairs with values[k]
};

/// Eigenvalues and eigenvectors; same ordering and contract as
/// hermitian_eigenvalues.
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& h);

/// Sum of |eigenvalue| over a Hermitian matrix.
double trace_norm_hermitian(const ComplexMatrix& h);

/// Singular values t1 >= t2 >= t3 >= 0, from the eigenvalues of qᵀq.
SingularValues3 singular_values_3(const RealMatrix3& q);

}  // namespace qcorr
