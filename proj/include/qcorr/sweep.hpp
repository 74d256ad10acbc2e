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

#include <ostream>
#include <string>
#include <string_view>

#include "qcorr/oracles.hpp"
#include "qcorr/state_spec.hpp"

namespace qcorr {

/// One scalar parameter varied on an even grid over [start, stop], all
/// others held at `fixed`.
struct SweepSpec {
  Family family = Family::Pure;
  std::string varying_param;
  double start = 0.0;
  double stop = 1.0;
  int steps = 2;
  StateSpec fixed;

  /// Throws ParseError unless steps >= 2, start < stop and the varying
  /// parameter is a scalar parameter of the family.
  void validate() const;
  double value_at(int step) const noexcept;
};

/// {"family": ..., "vary": ..., "range": [start, stop, steps], "fixed": {...}}
SweepSpec parse_sweep_spec(std::string_view text);

/// Writes the CSV header and one row per step in ascending parameter order.
/// Invalid states yield a row with empty measures and status
/// "invalid:<invariant>"; the sweep continues. Returns the number of invalid rows.
int run_sweep(const SweepSpec& spec, const SearchConfig& cfg, std::ostream& out);

}  // namespace qcorr
