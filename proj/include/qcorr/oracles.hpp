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

#include <cstdint>

#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Search settings for the brute-force oracles. The coarse grid covers the
/// hemisphere of measurement directions in projector_pair's (θ, φ) convention.
struct SearchConfig {
  int grid_theta = 64;
  int grid_phi = 128;
  int refine_iters = 40;
  double refine_shrink = 0.5;
  std::uint64_t seed = 20140713;

  /// Throws std::invalid_argument unless grid_theta >= 32, grid_phi >= 64,
  /// refine_iters >= 20 and 0 < refine_shrink < 1.
  void validate() const;
};

/// Σ_k (P_k ⊗ I) ρ (P_k ⊗ I) for (P_1, P_2) = projector_pair(theta, phi).
DensityMatrix measurement_map(const DensityMatrix& rho, double theta, double phi);

/// ‖ρ - measurement_map(ρ, θ, φ)‖₁, the quantity minimized by d1_oracle.
double measurement_disturbance(const DensityMatrix& rho, double theta, double phi);

/// Trace-norm discord by direct minimization over projective measurements
/// on subsystem A: coarse hemisphere grid, then compass-search refinement of
/// the best cells. Deterministic for a given config.
double d1_oracle(const DensityMatrix& rho, const SearchConfig& cfg = {});

/// Upper bound on D₁ from a cheap scan that stops as soon as some
/// measurement achieves a disturbance at or below `threshold`. Returns the
/// smallest disturbance seen.
double d1_upper_bound(const DensityMatrix& rho, double threshold, const SearchConfig& cfg = {});

/// sup |ω(AB) - ω(A)ω(B)| over normalized local observables A = a·σ ⊗ I,
/// B = I ⊗ b·σ: spherical grid of starts, then alternating maximization.
double mmc_oracle(const DensityMatrix& rho, const SearchConfig& cfg = {});

/// Cov(X, Y) for ±1-valued X, Y with joint table p, via the closed expression
/// p11 + p22 - p12 - p21 + (p12 - p21)² - (p11 - p22)².
double classical_cov(const ProbTable2x2& p);

/// Cov(X, Y) = <XY> - <X><Y> from the first moments.
double classical_cov_moments(const ProbTable2x2& p);

}  // namespace qcorr
