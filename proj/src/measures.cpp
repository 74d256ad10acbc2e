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

#include "qcorr/measures.hpp"

#include <algorithm>
#include <cmath>

#include "qcorr/error.hpp"

namespace qcorr {
namespace {

constexpr double kDegenerateTol = 1e-9;
constexpr double kDenominatorFloor = 1e-14;

struct XInvariants {
  double x;
  double alpha1;
  double alpha2;
  double alpha3;
};

XInvariants x_invariants(const XStateParams& p) {
  const double r14 = std::abs(p.rho14);
  const double r23 = std::abs(p.rho23);
  return {2.0 * (p.rho11 + p.rho22) - 1.0, 2.0 * (r23 + r14), 2.0 * (r23 - r14),
          1.0 - 2.0 * (p.rho22 + p.rho33)};
}

}  // namespace

std::string_view to_string(D1Method method) noexcept {
  return method == D1Method::ClosedForm ? "closed_form" : "oracle";
}

RealMatrix3 covariance_matrix(const DensityMatrix& rho) {
  const auto [a, b] = bloch_vectors(rho);
  RealMatrix3 q = correlation_tensor(rho);
  q -= RealMatrix3::outer(a.components(), b.components());
  return q;
}

double mmc(const DensityMatrix& rho) { return singular_values_3(covariance_matrix(rho))[0]; }

double correlation_distance_from_singular_values(const SingularValues3& t) {
  const auto [t1, t2, t3] = t;
  return 0.25 * (std::abs(t1 + t2 + t3) + std::abs(t1 + t2 - t3) + std::abs(t1 - t2 + t3) +
                 std::abs(-t1 + t2 + t3));
}

double correlation_distance(const DensityMatrix& rho) {
  return correlation_distance_from_singular_values(singular_values_3(covariance_matrix(rho)));
}

double negativity(const DensityMatrix& rho) {
  const double n = trace_norm_hermitian(partial_transpose(rho)) - 1.0;
  return std::max(n, 0.0);
}

bool d1_x_state_is_degenerate(const XStateParams& params) {
  const auto [x, a1, a2, a3] = x_invariants(params);
  return std::abs(x) < kDegenerateTol && std::abs(std::abs(a1) - std::abs(a2)) < kDegenerateTol &&
         std::abs(std::abs(a2) - std::abs(a3)) < kDegenerateTol;
}

D1Result d1_x_state(const XStateParams& params, const SearchConfig& cfg) {
  params.validate();
  if (d1_x_state_is_degenerate(params)) {
    return {d1_oracle(x_state(params), cfg), D1Method::Oracle};
  }
  const auto [x, a1, a2, a3] = x_invariants(params);
  const double a1sq = a1 * a1;
  const double a2sq = a2 * a2;
  const double a3sq = a3 * a3;
  const double hi = std::max(a3sq, a2sq + x * x);
  const double lo = std::min(a3sq, a1sq);
  const double denominator = hi - lo + a1sq - a2sq;
  if (std::abs(denominator) < kDenominatorFloor) {
    throw NumericalDegeneracy("X-state discord denominator vanishes outside the degenerate set");
  }
  const double ratio = (hi * a1sq - lo * a2sq) / denominator;
  return {std::sqrt(std::max(ratio, 0.0)), D1Method::ClosedForm};
}

MeasureReport full_report(const DensityMatrix& rho, const SearchConfig& cfg) {
  MeasureReport report;
  const auto [a, b] = bloch_vectors(rho);
  report.bloch_a = a;
  report.bloch_b = b;
  report.singular_values = singular_values_3(covariance_matrix(rho));
  report.mmc = report.singular_values[0];
  report.correlation_distance = correlation_distance_from_singular_values(report.singular_values);
  report.negativity = negativity(rho);
  if (const auto x = x_params_of(rho)) {
    const D1Result d1 = d1_x_state(*x, cfg);
    report.d1 = d1.value;
    report.d1_method = d1.method;
  } else {
    report.d1 = d1_oracle(rho, cfg);
    report.d1_method = D1Method::Oracle;
  }
  return report;
}

}  // namespace qcorr
