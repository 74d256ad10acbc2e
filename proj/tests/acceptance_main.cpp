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

// Acceptance suite: runs every reproduction check at its pinned tolerance and
// prints one PASS/FAIL line per criterion, followed by the individual checks.

#include <chrono>
#include <cstdio>
#include <map>

#include "qcorr/state_spec.hpp"
#include "qcorr/verify.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const std::vector<qcorr::VerifyResult> results = qcorr::run_verify();
  const double seconds = std::chrono::duration<double>(clock::now() - t0).count();

  std::map<int, std::pair<int, int>> per_criterion;  // criterion -> (checks, failures)
  for (const auto& r : results) {
    auto& [checks, failures] = per_criterion[r.criterion];
    ++checks;
    if (!r.passed) ++failures;
  }

  const auto& titles = qcorr::criterion_titles();
  int failed_criteria = 0;
  for (int c = 1; c < static_cast<int>(titles.size()); ++c) {
    const auto it = per_criterion.find(c);
    const bool ran = it != per_criterion.end();
    const bool ok = ran && it->second.second == 0;
    if (!ok) ++failed_criteria;
    std::printf("[%s] AC%d %s (%d checks)\n", ok ? "PASS" : "FAIL", c, titles[c].c_str(),
                ran ? it->second.first : 0);
  }
  std::printf("\n");
  for (const auto& r : results) {
    std::printf("  %s AC%d %-44s expected=%s actual=%s tol=%s\n", r.passed ? "ok  " : "FAIL",
                r.criterion, r.check_id.c_str(), qcorr::format_double(r.expected).c_str(),
                qcorr::format_double(r.actual).c_str(), qcorr::format_double(r.tolerance).c_str());
  }
  std::printf("\n%zu checks in %.1f s; %d criteria failed\n", results.size(), seconds,
              failed_criteria);
  return failed_criteria == 0 ? 0 : 1;
}
