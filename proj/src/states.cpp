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

#include "qcorr/states.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qcorr/error.hpp"

namespace qcorr {
namespace {

using namespace std::complex_literals;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void require_probability(double p, const char* invariant) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidState(invariant, "probability " + num(p) + " not in [0, 1]");
}

const ComplexMatrix& identity2() {
  static const ComplexMatrix id = ComplexMatrix::identity(2);
  return id;
}

}  // namespace

BlochVector::BlochVector(double x, double y, double z) : v_{x, y, z} {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
    throw InvalidState("bloch.finite", "Bloch vector has non-finite components");
  }
  if (norm() > 1.0 + kBlochTol) {
    throw InvalidState("bloch.norm", "Bloch vector norm " + num(norm()) + " exceeds 1");
  }
}

double BlochVector::norm() const noexcept { return std::hypot(v_[0], v_[1], v_[2]); }

BlochVector BlochVector::clamped(const std::array<double, 3>& v) {
  const double n = std::hypot(v[0], v[1], v[2]);
  if (n <= 1.0) return BlochVector(v);
  return BlochVector(v[0] / n, v[1] / n, v[2] / n);
}

DensityMatrix::DensityMatrix(const ComplexMatrix& mat) : mat_(mat) {
  if (mat.dim() != 4) {
    throw InvalidState("dimension", "two-qubit state must be 4x4, got " + std::to_string(mat.dim()));
  }
  for (const Complex& z : mat.entries()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvalidState("finite", "matrix has non-finite entries");
    }
  }
  if (!mat.is_hermitian(kHermitianTol)) {
    throw InvalidState("hermitian", "matrix deviates from Hermitian by more than 1e-12");
  }
  const Complex tr = mat.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw InvalidState("unit_trace", "trace " + num(tr.real()) + " differs from 1");
  }
  const double min_ev = hermitian_eigenvalues(mat).back();
  if (min_ev < -kPsdTol) {
    throw InvalidState("positive_semidefinite", "minimum eigenvalue " + num(min_ev) + " < -1e-10");
  }
}

DensityMatrix DensityMatrix::maximally_mixed() {
  return DensityMatrix(0.25 * ComplexMatrix::identity(4));
}

void XStateParams::validate() const {
  for (double d : {rho11, rho22, rho33, rho44}) {
    if (!(d >= 0.0)) throw InvalidState("x_state.populations", "negative population " + num(d));
  }
  const double total = rho11 + rho22 + rho33 + rho44;
  if (std::abs(total - 1.0) > kTraceTol) {
    throw InvalidState("x_state.unit_trace", "populations sum to " + num(total));
  }
  if (rho14 * rho14 > rho11 * rho44 + 1e-12) {
    throw InvalidState("x_state.outer_coherence", "rho14^2 exceeds rho11*rho44");
  }
  if (rho23 * rho23 > rho22 * rho33 + 1e-12) {
    throw InvalidState("x_state.inner_coherence", "rho23^2 exceeds rho22*rho33");
  }
}

void ProbTable2x2::validate() const {
  double total = 0.0;
  for (const auto& row : p) {
    for (double v : row) {
      if (!(v >= 0.0)) throw InvalidState("prob_table.nonnegative", "negative entry " + num(v));
      total += v;
    }
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw InvalidState("prob_table.normalized", "entries sum to " + num(total));
  }
}

ComplexMatrix pauli(int i) {
  switch (i) {
    case 1: return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0});
    case 2: return ComplexMatrix(2, {0.0, -1i, 1i, 0.0});
    case 3: return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0});
    default: throw std::out_of_range("Pauli index must be 1, 2 or 3, got " + std::to_string(i));
  }
}

ProjectorPair projector_pair(double theta, double phi) {
  const double c2 = std::cos(theta) * std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  const Complex off = 0.5 * std::sin(2.0 * theta) * std::exp(-1i * phi);
  ProjectorPair pair{ComplexMatrix(2, {c2, off, std::conj(off), s2}),
                     ComplexMatrix(2, {s2, -off, -std::conj(off), c2})};
  return pair;
}

std::array<double, 3> projector_axis(double theta, double phi) {
  const double s = std::sin(2.0 * theta);
  return {s * std::cos(phi), s * std::sin(phi), std::cos(2.0 * theta)};
}

ComplexMatrix qubit_state(const BlochVector& a) {
  ComplexMatrix m = identity2();
  for (int i = 0; i < 3; ++i) m += a[i] * pauli(i + 1);
  m *= 0.5;
  return m;
}

DensityMatrix pure_state(double n) {
  if (!(n >= 0.0 && n <= 1.0)) throw InvalidState("pure.n_range", "N = " + num(n) + " not in [0, 1]");
  const double root = std::sqrt(1.0 - n * n);
  ComplexMatrix m(4);
  m(0, 0) = 0.5 * (1.0 + root);
  m(3, 3) = 0.5 * (1.0 - root);
  m(0, 3) = m(3, 0) = 0.5 * n;
  return DensityMatrix(m);
}

DensityMatrix cq_state(double p1, double theta, double phi, const BlochVector& a1,
                       const BlochVector& a2) {
  require_probability(p1, "cq.probability");
  const auto [first, second] = projector_pair(theta, phi);
  ComplexMatrix m = p1 * kron(first, qubit_state(a1));
  m += (1.0 - p1) * kron(second, qubit_state(a2));
  return DensityMatrix(m);
}

DensityMatrix cc_state(const ProbTable2x2& p, double theta_a, double phi_a, double theta_b,
                       double phi_b) {
  p.validate();
  const auto pa = projector_pair(theta_a, phi_a);
  const auto pb = projector_pair(theta_b, phi_b);
  const std::array<const ComplexMatrix*, 2> side_a{&pa.first, &pa.second};
  const std::array<const ComplexMatrix*, 2> side_b{&pb.first, &pb.second};
  ComplexMatrix m(4);
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) m += p(j, k) * kron(*side_a[j], *side_b[k]);
  }
  return DensityMatrix(m);
}

DensityMatrix x_state(const XStateParams& params) {
  params.validate();
  ComplexMatrix m(4);
  m(0, 0) = params.rho11;
  m(1, 1) = params.rho22;
  m(2, 2) = params.rho33;
  m(3, 3) = params.rho44;
  m(0, 3) = m(3, 0) = params.rho14;
  m(1, 2) = m(2, 1) = params.rho23;
  return DensityMatrix(m);
}

double rho_d_s_max(double w) { return std::sqrt(std::max(0.0, 0.5 * w - w * w)); }

XStateParams rho_d_params(double w, double s) {
  if (!(w > 0.0 && w < 0.5)) throw InvalidState("rho_d.w_range", "w = " + num(w) + " not in (0, 1/2)");
  if (!(s > 0.0)) throw InvalidState("rho_d.s_range", "s = " + num(s) + " must be positive");
  if (s > rho_d_s_max(w) + 1e-12) {
    throw InvalidState("rho_d.s_max", "s = " + num(s) + " exceeds s_max = " + num(rho_d_s_max(w)));
  }
  return {w, w, 0.5 - w, 0.5 - w, s, s};
}

DensityMatrix rho_d(double w, double s) {
  const XStateParams x = rho_d_params(w, s);
  ComplexMatrix m = ComplexMatrix::diagonal({x.rho11, x.rho22, x.rho33, x.rho44});
  m(0, 3) = m(3, 0) = m(1, 2) = m(2, 1) = s;
  return DensityMatrix(m);
}

XStateParams rho_theta_params(double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi / 2)) {
    throw InvalidState("rho_theta.theta_range", "theta = " + num(theta) + " not in (0, pi/2)");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {0.5 * c * c, 0.0, 0.5, 0.5 * s * s, 0.25 * std::sin(2.0 * theta), 0.0};
}

DensityMatrix rho_theta(double theta) {
  const XStateParams x = rho_theta_params(theta);
  ComplexMatrix m = ComplexMatrix::diagonal({x.rho11, 0.0, 0.5, x.rho44});
  m(0, 3) = m(3, 0) = x.rho14;
  return DensityMatrix(m);
}

XStateParams bell_diagonal_params(double c1, double c2, double c3) {
  return {0.25 * (1.0 + c3), 0.25 * (1.0 - c3), 0.25 * (1.0 - c3), 0.25 * (1.0 + c3),
          0.25 * (c1 - c2), 0.25 * (c1 + c2)};
}

DensityMatrix bell_diagonal(double c1, double c2, double c3) {
  const std::array<double, 4> weights{0.25 * (1 - c1 - c2 - c3), 0.25 * (1 - c1 + c2 + c3),
                                      0.25 * (1 + c1 - c2 + c3), 0.25 * (1 + c1 + c2 - c3)};
  for (double w : weights) {
    if (!(w >= -kPsdTol)) {
      throw InvalidState("bell_diagonal.tetrahedron",
                         "c = (" + num(c1) + ", " + num(c2) + ", " + num(c3) +
                             ") gives eigenvalue " + num(w));
    }
  }
  ComplexMatrix m = ComplexMatrix::identity(4);
  const std::array<double, 3> c{c1, c2, c3};
  for (int j = 0; j < 3; ++j) m += c[j] * kron(pauli(j + 1), pauli(j + 1));
  m *= 0.25;
  return DensityMatrix(m);
}

ComplexMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  ComplexMatrix out(2);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      for (int k = 0; k < 2; ++k) {
        out(r, c) += keep == Subsystem::A ? rho(2 * r + k, 2 * c + k) : rho(2 * k + r, 2 * k + c);
      }
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m) {
  if (m.dim() != 4) throw DimensionError("partial transpose needs a 4x4 matrix");
  ComplexMatrix out(4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) out(2 * i + l, 2 * j + k) = m(2 * i + k, 2 * j + l);
      }
    }
  }
  return out;
}

std::pair<BlochVector, BlochVector> bloch_vectors(const DensityMatrix& rho) {
  const ComplexMatrix rho_a = partial_trace(rho, Subsystem::A);
  const ComplexMatrix rho_b = partial_trace(rho, Subsystem::B);
  // ρ_A = ½(I + a·σ), so a = (2 Re ρ_A(1,0), 2 Im ρ_A(1,0), ρ_A(0,0) - ρ_A(1,1)).
  auto axis = [](const ComplexMatrix& m) {
    return std::array<double, 3>{2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(),
                                 (m(0, 0) - m(1, 1)).real()};
  };
  return {BlochVector::clamped(axis(rho_a)), BlochVector::clamped(axis(rho_b))};
}

RealMatrix3 correlation_tensor(const DensityMatrix& rho) {
  RealMatrix3 t;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      t(i, j) = (rho.matrix() * kron(pauli(i + 1), pauli(j + 1))).trace().real();
    }
  }
  return t;
}

std::optional<XStateParams> x_params_of(const DensityMatrix& rho, double tol) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) continue;
      if (std::abs(rho(i, j)) >= tol) return std::nullopt;
    }
  }
  return XStateParams{rho(0, 0).real(), rho(1, 1).real(), rho(2, 2).real(),
                      rho(3, 3).real(), std::abs(rho(0, 3)),  std::abs(rho(1, 2))};
}

}  // namespace qcorr
