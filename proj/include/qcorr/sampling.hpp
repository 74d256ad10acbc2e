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
#include <random>

#include "qcorr/states.hpp"

namespace qcorr::sampling {

using Rng = std::mt19937_64;

std::array<double, 3> unit_vector(Rng& rng);
/// Uniform in the unit ball.
BlochVector bloch_in_ball(Rng& rng);
/// Dirichlet(1,1,1,1) table.
ProbTable2x2 prob_table(Rng& rng);
/// Uniform in the tetrahedron of valid Bell-diagonal coefficients.
std::array<double, 3> bell_coefficients(Rng& rng);
/// Random valid X state with signed coherences.
XStateParams x_state_params(Rng& rng);
/// Mixture of 1 to 4 Haar-random pure states with random weights.
DensityMatrix density_matrix(Rng& rng);
/// Haar-random 2x2 unitary.
ComplexMatrix unitary2(Rng& rng);

}  // namespace qcorr::sampling
