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

#include <string>
#include <vector>

#include "qcorr/oracles.hpp"

namespace qcorr {

/// Outcome of one reproduction check; passed iff |expected - actual| <= tolerance.
struct VerifyResult {
  std::string check_id;
  int criterion = 0;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyOptions {
  SearchConfig search;
  /// Only checks whose id starts with this prefix are run.
  std::string filter;
  /// Multiplies every tolerance. Values below zero make every check fail,
  /// which is how the harness checks itself.
  double tolerance_scale = 1.0;
};

inline constexpr double kClosedFormTol = 1e-10;
inline constexpr double kOracleTol = 2e-3;

/// Titles of the nine acceptance criteria, index 1..9 (0 unused).
const std::vector<std::string>& criterion_titles();

/// Runs the reproduction suite: closed forms, inequality chains and oracle
/// cross-checks for every state family.
std::vector<VerifyResult> run_verify(const VerifyOptions& options = {});

}  // namespace qcorr
