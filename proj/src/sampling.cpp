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

#include "qcorr/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <vector>
#include <numbers>

namespace qcorr::sampling {
namespace {

std::array<double, 4> dirichlet4(Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::array<double, 4> w{};
  double total = 0.0;
  for (double& v : w) total += (v = expo(rng));
  for (double& v : w) v /= total;
  return w;
}

}  // namespace

std::array<double, 3> unit_vector(Rng& rng) {
  std::normal_distribution<double> normal;
  for (;;) {
    std::array<double, 3> v{normal(rng), normal(rng), normal(rng)};
    const double n = std::hypot(v[0], v[1], v[2]);
    if (n > 1e-8) return {v[0] / n, v[1] / n, v[2] / n};
  }
}

BlochVector bloch_in_ball(Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const auto dir = unit_vector(rng);
  const double r = std::cbrt(unif(rng));
  return BlochVector(r * dir[0], r * dir[1], r * dir[2]);
}

ProbTable2x2 prob_table(Rng& rng) {
  const auto w = dirichlet4(rng);
  ProbTable2x2 t{{{{w[0], w[1]}, {w[2], w[3]}}}};
  // Absorb rounding so the entries sum to 1 as closely as doubles allow.
  t.p[1][1] = std::max(0.0, 1.0 - (w[0] + w[1] + w[2]));
  return t;
}

std::array<double, 3> bell_coefficients(Rng& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (;;) {
    const std::array<double, 3> c{unif(rng), unif(rng), unif(rng)};
    if (1 - c[0] - c[1] - c[2] >= 0 && 1 - c[0] + c[1] + c[2] >= 0 &&
        1 + c[0] - c[1] + c[2] >= 0 && 1 + c[0] + c[1] - c[2] >= 0) {
      return c;
    }
  }
}

XStateParams x_state_params(Rng& rng) {
  const auto w = dirichlet4(rng);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  XStateParams p;
  p.rho11 = w[0];
  p.rho22 = w[1];
  p.rho33 = w[2];
  p.rho44 = std::max(0.0, 1.0 - (w[0] + w[1] + w[2]));
  p.rho14 = unif(rng) * std::sqrt(p.rho11 * p.rho44);
  p.rho23 = unif(rng) * std::sqrt(p.rho22 * p.rho33);
  return p;
}

DensityMatrix density_matrix(Rng& rng) {
  std::uniform_int_distribution<int> rank(1, 4);
  std::normal_distribution<double> normal;
  const int k = rank(rng);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> weights(k);
  double total = 0.0;
  for (double& w : weights) total += (w = expo(rng));

  ComplexMatrix m(4);
  for (int s = 0; s < k; ++s) {
    std::array<Complex, 4> psi{};
    double norm2 = 0.0;
    for (Complex& z : psi) {
      z = {normal(rng), normal(rng)};
      norm2 += std::norm(z);
    }
    const double scale = weights[s] / total / norm2;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) m(i, j) += scale * psi[i] * std::conj(psi[j]);
    }
  }
  // Symmetrize and renormalize away rounding before validation.
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  h *= 1.0 / h.trace().real();
  return DensityMatrix(h);
}

ComplexMatrix unitary2(Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  // Haar measure: |u00|² uniform on [0, 1].
  const double c = std::sqrt(unif(rng));
  const double s = std::sqrt(1.0 - c * c);
  const Complex ea = std::polar(1.0, angle(rng));
  const Complex eb = std::polar(1.0, angle(rng));
  const Complex eg = std::polar(1.0, angle(rng));
  return eg * ComplexMatrix(2, {ea * c, eb * s, -std::conj(eb) * s, std::conj(ea) * c});
}

}  // namespace qcorr::sampling
