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
#include <optional>
#include <utility>

#include "qcorr/linalg.hpp"

namespace qcorr {

inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kBlochTol = 1e-12;

/// Real 3-vector of norm at most 1 (single-qubit state or measurement axis).
class BlochVector {
 public:
  BlochVector() = default;
  /// Throws InvalidState("bloch.norm") if the norm exceeds 1 + 1e-12.
  BlochVector(double x, double y, double z);
  explicit BlochVector(const std::array<double, 3>& v) : BlochVector(v[0], v[1], v[2]) {}

  double x() const noexcept { return v_[0]; }
  double y() const noexcept { return v_[1]; }
  double z() const noexcept { return v_[2]; }
  double operator[](int i) const noexcept { return v_[i]; }
  const std::array<double, 3>& components() const noexcept { return v_; }
  double norm() const noexcept;

  /// Like the checked constructor, but rescales a norm slightly above 1
  /// (rounding from a valid state) back onto the unit sphere.
  static BlochVector clamped(const std::array<double, 3>& v);

 private:
  std::array<double, 3> v_{};
};

/// Validated two-qubit state: Hermitian, unit trace, PSD (all within the
/// library tolerances). Basis order |00>,|01>,|10>,|11>, subsystem A first.
class DensityMatrix {
 public:
  /// Throws InvalidState naming "hermitian", "unit_trace",
  /// "positive_semidefinite" or "dimension".
  explicit DensityMatrix(const ComplexMatrix& mat);

  const ComplexMatrix& matrix() const noexcept { return mat_; }
  Complex operator()(int row, int col) const noexcept { return mat_(row, col); }

  static DensityMatrix maximally_mixed();

 private:
  ComplexMatrix mat_;
};

struct ProjectorPair {
  ComplexMatrix first;
  ComplexMatrix second;
};

/// Entries of an X-shaped state. Off-diagonals are signed reals; only their
/// magnitudes matter to any measure.
struct XStateParams {
  double rho11 = 0.25;
  double rho22 = 0.25;
  double rho33 = 0.25;
  double rho44 = 0.25;
  double rho14 = 0.0;
  double rho23 = 0.0;

  /// Throws InvalidState if the populations are negative, do not sum to 1,
  /// or a coherence exceeds its positivity bound.
  void validate() const;
};

/// Joint distribution p[j][k] = Prob{X = x_j, Y = y_k}, x_1 = y_1 = +1.
struct ProbTable2x2 {
  std::array<std::array<double, 2>, 2> p{};

  double operator()(int j, int k) const noexcept { return p[j][k]; }
  void validate() const;
};

enum class Subsystem { A, B };

/// Pauli matrix sigma_i for i in {1, 2, 3}; throws std::out_of_range otherwise.
ComplexMatrix pauli(int i);

/// Rank-1 projectors onto the Bloch axis
/// (sin 2θ cos φ, sin 2θ sin φ, cos 2θ) and its antipode.
ProjectorPair projector_pair(double theta, double phi);

/// Unit Bloch axis onto which projector_pair(theta, phi).first projects.
std::array<double, 3> projector_axis(double theta, double phi);

/// ½(I + a·σ).
ComplexMatrix qubit_state(const BlochVector& a);

DensityMatrix pure_state(double n);

/// p1 P1 ⊗ ρ(a1) + (1 - p1) P2 ⊗ ρ(a2) with (P1, P2) = projector_pair(theta, phi).
DensityMatrix cq_state(double p1, double theta, double phi, const BlochVector& a1,
                       const BlochVector& a2);

/// Σ p_jk P_j ⊗ P_k with independent projector angles on each side.
DensityMatrix cc_state(const ProbTable2x2& p, double theta_a, double phi_a, double theta_b,
                       double phi_b);
inline DensityMatrix cc_state(const ProbTable2x2& p, double theta, double phi) {
  return cc_state(p, theta, phi, theta, phi);
}

DensityMatrix x_state(const XStateParams& params);

/// Largest admissible coherence s for rho_d at population w.
double rho_d_s_max(double w);
DensityMatrix rho_d(double w, double s);
DensityMatrix rho_theta(double theta);
DensityMatrix bell_diagonal(double c1, double c2, double c3);

XStateParams rho_d_params(double w, double s);
XStateParams rho_theta_params(double theta);
XStateParams bell_diagonal_params(double c1, double c2, double c3);

/// Reduced state of the kept subsystem.
ComplexMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

/// Transpose of the second tensor factor.
ComplexMatrix partial_transpose(const ComplexMatrix& m);
inline ComplexMatrix partial_transpose(const DensityMatrix& rho) {
  return partial_transpose(rho.matrix());
}

/// a_i = tr(ρ σ_i⊗I), b_j = tr(ρ I⊗σ_j).
std::pair<BlochVector, BlochVector> bloch_vectors(const DensityMatrix& rho);

/// T_ij = tr(ρ σ_i⊗σ_j).
RealMatrix3 correlation_tensor(const DensityMatrix& rho);

/// X-pattern parameters if every entry off the diagonal and anti-diagonal has
/// magnitude below `tol`. Corner coherences are returned as moduli.
std::optional<XStateParams> x_params_of(const DensityMatrix& rho, double tol = 1e-12);

}  // namespace qcorr
