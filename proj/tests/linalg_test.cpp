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

#include <gtest/gtest.h>

#include <Eigen/SVD>
#include <charconv>
#include <cmath>
#include <string>

#include "qcorr/error.hpp"
#include "qcorr/states.hpp"
#include "test_util.hpp"

namespace qcorr {
namespace {

using namespace std::complex_literals;
using testing::jacobi_eigenvalues;
using testing::random_hermitian;
using testing::random_matrix;
using testing::random_real3;
using testing::Rng;

void expect_values(const std::vector<double>& actual, const std::vector<double>& expected,
                   double tol) {
  ASSERT_EQ(actual.size(), expected.size());
  for (std::size_t k = 0; k < actual.size(); ++k) EXPECT_NEAR(actual[k], expected[k], tol) << k;
}

TEST(ComplexMatrix, RejectsUnsupportedDimensions) {
  EXPECT_THROW(ComplexMatrix(1), DimensionError);
  EXPECT_THROW(ComplexMatrix(5), DimensionError);
  EXPECT_THROW(ComplexMatrix(2, {1.0, 2.0, 3.0}), DimensionError);
}

TEST(ComplexMatrix, BasicAlgebra) {
  EXPECT_EQ(ComplexMatrix::identity(4).trace(), Complex(4.0));
  EXPECT_LT((pauli(1) * pauli(2)).max_abs_diff(1i * pauli(3)), 1e-15);

  Rng rng(1);
  const ComplexMatrix a = random_matrix(3, rng);
  EXPECT_EQ(a.adjoint().adjoint(), a);
  EXPECT_LT(((a + a) - 2.0 * a).max_abs_diff(ComplexMatrix::zero(3)), 1e-15);
  EXPECT_THROW(a + ComplexMatrix::identity(2), DimensionError);
  EXPECT_THROW(a * ComplexMatrix::identity(4), DimensionError);
}

TEST(ComplexMatrix, EntriesRoundTripBitExactly) {
  Rng rng(2);
  const ComplexMatrix a = random_matrix(4, rng);
  ComplexMatrix b(4);
  const auto entries = a.entries();
  for (int k = 0; k < 16; ++k) {
    // Through shortest decimal text and back.
    for (double part : {entries[k].real(), entries[k].imag()}) {
      char buf[64];
      const auto end = std::to_chars(buf, buf + sizeof buf, part).ptr;
      double back = 0.0;
      std::from_chars(buf, end, back);
      EXPECT_EQ(back, part);
    }
    b(k / 4, k % 4) = entries[k];
  }
  EXPECT_EQ(a, b);
}

TEST(Kron, Examples) {
  EXPECT_EQ(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
            ComplexMatrix::identity(4));
  EXPECT_EQ(kron(pauli(3), ComplexMatrix::identity(2)),
            ComplexMatrix::diagonal({1.0, 1.0, -1.0, -1.0}));
  const ComplexMatrix xx = kron(pauli(1), pauli(1));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) EXPECT_EQ(xx(i, j), Complex(i + j == 3 ? 1.0 : 0.0)) << i << j;
  }
}

TEST(Kron, IndexLayout) {
  Rng rng(3);
  const ComplexMatrix a = random_matrix(2, rng);
  const ComplexMatrix b = random_matrix(2, rng);
  const ComplexMatrix k = kron(a, b);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) EXPECT_EQ(k(i * 2 + p, j * 2 + q), a(i, j) * b(p, q));
}

TEST(Kron, OverflowIsRejected) {
  EXPECT_THROW(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(3)), DimensionError);
  EXPECT_THROW(kron(ComplexMatrix::identity(4), ComplexMatrix::identity(2)), DimensionError);
}

TEST(Kron, MixedProductProperty) {
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexMatrix a = random_matrix(2, rng), b = random_matrix(2, rng);
    const ComplexMatrix c = random_matrix(2, rng), d = random_matrix(2, rng);
    EXPECT_LT((kron(a, b) * kron(c, d)).max_abs_diff(kron(a * c, b * d)), 1e-12);
  }
}

TEST(HermitianEigenvalues, Examples) {
  expect_values(hermitian_eigenvalues(ComplexMatrix::identity(4)), {1, 1, 1, 1}, 1e-14);
  expect_values(hermitian_eigenvalues(pauli(1)), {1, -1}, 1e-15);
  const auto bd = bell_diagonal(0.5, -0.3, 0.2).matrix();
  expect_values(hermitian_eigenvalues(bd), {0.5, 0.25, 0.15, 0.1}, 1e-14);
  expect_values(jacobi_eigenvalues(bd), {0.5, 0.25, 0.15, 0.1}, 1e-14);
}

TEST(HermitianEigenvalues, RejectsNonHermitian) {
  ComplexMatrix m = ComplexMatrix::identity(4);
  m(0, 1) = 1e-9;
  EXPECT_THROW(hermitian_eigenvalues(m), ContractViolation);
  EXPECT_THROW(trace_norm_hermitian(m), ContractViolation);
  m(1, 0) = 1e-9 + 5e-13;  // within tolerance
  EXPECT_NO_THROW(hermitian_eigenvalues(m));
}

TEST(HermitianEigenvalues, AgreesWithJacobiOracle) {
  Rng rng(5);
  for (int dim : {2, 3, 4}) {
    for (int trial = 0; trial < 300; ++trial) {
      const ComplexMatrix h = random_hermitian(dim, rng);
      expect_values(hermitian_eigenvalues(h), jacobi_eigenvalues(h), 1e-10);
    }
  }
}

TEST(HermitianEigenvalues, SumEqualsTraceAndResidualsAreSmall) {
  Rng rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    const ComplexMatrix h = random_hermitian(4, rng);
    const auto ev = hermitian_eigenvalues(h);
    double sum = 0.0;
    for (double v : ev) sum += v;
    EXPECT_NEAR(sum, h.trace().real(), 1e-10);
    EXPECT_TRUE(std::is_sorted(ev.rbegin(), ev.rend()));

    const HermitianEigensystem sys = hermitian_eigensystem(h);
    for (std::size_t k = 0; k < sys.values.size(); ++k) {
      EXPECT_NEAR(sys.values[k], ev[k], 1e-12);
      double residual2 = 0.0, norm2 = 0.0;
      for (int i = 0; i < 4; ++i) {
        Complex hv = 0.0;
        for (int j = 0; j < 4; ++j) hv += h(i, j) * sys.vectors[k][j];
        residual2 += std::norm(hv - sys.values[k] * sys.vectors[k][i]);
        norm2 += std::norm(sys.vectors[k][i]);
      }
      EXPECT_NEAR(norm2, 1.0, 1e-12);
      EXPECT_LE(std::sqrt(residual2), 1e-10);
    }
  }
}

TEST(TraceNorm, Examples) {
  EXPECT_EQ(trace_norm_hermitian(ComplexMatrix::zero(4)), 0.0);
  EXPECT_NEAR(trace_norm_hermitian(ComplexMatrix::diagonal({0.5, -0.5})), 1.0, 1e-15);
  EXPECT_NEAR(trace_norm_hermitian(partial_transpose(pure_state(1.0))), 2.0, 1e-12);
}

TEST(TraceNorm, DominatesAbsoluteTrace) {
  Rng rng(7);
  for (int dim : {2, 3, 4}) {
    for (int trial = 0; trial < 300; ++trial) {
      const ComplexMatrix h = random_hermitian(dim, rng);
      EXPECT_GE(trace_norm_hermitian(h) + 1e-12, std::abs(h.trace().real()));
    }
  }
}

TEST(SingularValues3, Examples) {
  const auto zero = singular_values_3(RealMatrix3{});
  for (double t : zero) EXPECT_EQ(t, 0.0);

  const auto t = singular_values_3(RealMatrix3::diagonal(0.6, -0.6, 0.36));
  EXPECT_NEAR(t[0], 0.6, 1e-15);
  EXPECT_NEAR(t[1], 0.6, 1e-15);
  EXPECT_NEAR(t[2], 0.36, 1e-15);
}

TEST(SingularValues3, RankOneOuterProduct) {
  // 2 p1 p2 n (a1 - a2)ᵀ: the only nonzero singular value is 2 p1 p2 |n| |a1 - a2|.
  const double p1 = 0.3, p2 = 0.7;
  const std::array<double, 3> n{0.0, 0.6, 0.8};
  const std::array<double, 3> diff{0.5 - (-0.2), 0.1 - 0.4, -0.3 - 0.0};
  RealMatrix3 q = RealMatrix3::outer(n, diff);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) q(i, j) *= 2 * p1 * p2;
  const double expected = 2 * p1 * p2 * std::hypot(diff[0], diff[1], diff[2]);
  const auto t = singular_values_3(q);
  EXPECT_NEAR(t[0], expected, 1e-14);
  EXPECT_NEAR(t[1], 0.0, 1e-7);
  EXPECT_NEAR(t[2], 0.0, 1e-7);
}

TEST(SingularValues3, AgreesWithJacobiSvdAndTranspose) {
  Rng rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const RealMatrix3 q = random_real3(rng);
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = q(i, j);
    const Eigen::Vector3d reference = Eigen::JacobiSVD<Eigen::Matrix3d>(m).singularValues();
    const auto t = singular_values_3(q);
    const auto tt = singular_values_3(q.transpose());
    for (int k = 0; k < 3; ++k) {
      // sqrt of a Gram eigenvalue loses relative accuracy on tiny values.
      EXPECT_NEAR(t[k], reference(k), 1e-8);
      EXPECT_NEAR(t[k], tt[k], 1e-10);
      EXPECT_GE(t[k], 0.0);
    }
  }
}

}  // namespace
}  // namespace qcorr
