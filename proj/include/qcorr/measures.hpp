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

#include <string_view>

#include "qcorr/linalg.hpp"
#include "qcorr/oracles.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

enum class D1Method { ClosedForm, Oracle };

std::string_view to_string(D1Method method) noexcept;

struct D1Result {
  double value = 0.0;
  D1Method method = D1Method::ClosedForm;
};

/// All four measures of one state.
struct MeasureReport {
  double mmc = 0.0;
  double correlation_distance = 0.0;
  double negativity = 0.0;
  double d1 = 0.0;
  D1Method d1_method = D1Method::ClosedForm;
  SingularValues3 singular_values{};  // t1 >= t2 >= t3
  BlochVector bloch_a;
  BlochVector bloch_b;
};

/// Q = T - a bᵀ, the covariance of σ_i ⊗ I against I ⊗ σ_j.
RealMatrix3 covariance_matrix(const DensityMatrix& rho);

/// Maximal mutual correlation: the largest singular value of Q.
double mmc(const DensityMatrix& rho);

/// Correlation distance ‖ρ - ρ_A ⊗ ρ_B‖₁ from the singular values of Q.
double correlation_distance_from_singular_values(const SingularValues3& t);
double correlation_distance(const DensityMatrix& rho);

/// ‖ρ^PT‖₁ - 1, clamped at zero.
double negativity(const DensityMatrix& rho);

/// Closed-form trace-norm discord of an X state. Coherences enter through
/// their magnitudes. When x = 0 and |α1| = |α2| = |α3| (within 1e-9) the
/// formula does not apply and the oracle is used instead. Throws
/// NumericalDegeneracy if the denominator vanishes anywhere else.
D1Result d1_x_state(const XStateParams& params, const SearchConfig& cfg = {});

/// Whether d1_x_state will fall back to the oracle for these parameters.
bool d1_x_state_is_degenerate(const XStateParams& params);

/// Every measure at once; D₁ by closed form for X-shaped states (off-X
/// entries below 1e-12), by the oracle otherwise.
MeasureReport full_report(const DensityMatrix& rho, const SearchConfig& cfg = {});

}  // namespace qcorr
