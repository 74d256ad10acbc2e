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

#include "qcorr/sweep.hpp"

#include <algorithm>

#include "json.hpp"
#include "qcorr/error.hpp"
#include "qcorr/measures.hpp"

namespace qcorr {

using json = nlohmann::json;

void SweepSpec::validate() const {
  if (steps < 2) throw ParseError("sweep needs at least 2 steps");
  if (!(start < stop)) throw ParseError("sweep range needs start < stop");
  const auto& allowed = scalar_params(family);
  if (std::find(allowed.begin(), allowed.end(), varying_param) == allowed.end()) {
    throw ParseError("family '" + std::string(to_string(family)) + "' cannot vary '" +
                     varying_param + "'");
  }
  if (fixed.family != family) throw ParseError("fixed parameters belong to another family");
}

double SweepSpec::value_at(int step) const noexcept {
  if (step == steps - 1) return stop;
  return start + (stop - start) * step / (steps - 1);
}

SweepSpec parse_sweep_spec(std::string_view text) {
  json record;
  try {
    record = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed sweep spec: ") + e.what());
  }
  if (!record.is_object()) throw ParseError("sweep spec must be an object");
  for (const char* key : {"family", "vary", "range"}) {
    if (!record.contains(key)) throw ParseError(std::string("sweep spec needs field '") + key + "'");
  }
  const json& range = record["range"];
  if (!range.is_array() || range.size() != 3 || !range[0].is_number() || !range[1].is_number() ||
      !range[2].is_number_integer()) {
    throw ParseError("sweep 'range' must be [start, stop, steps] with integer steps");
  }
  if (!record["family"].is_string() || !record["vary"].is_string()) {
    throw ParseError("sweep 'family' and 'vary' must be strings");
  }

  SweepSpec spec;
  spec.family = family_from_string(record["family"].get<std::string>());
  spec.varying_param = record["vary"].get<std::string>();
  spec.start = range[0].get<double>();
  spec.stop = range[1].get<double>();
  spec.steps = range[2].get<int>();

  // Fixed parameters are parsed without the required-field check, since the
  // varying one is supplied per row.
  json fixed = record.value("fixed", json::object());
  if (!fixed.is_object()) throw ParseError("sweep 'fixed' must be an object");
  if (!fixed.contains(spec.varying_param)) fixed[spec.varying_param] = spec.start;
  spec.fixed = parse_state_params(spec.family, fixed.dump());
  spec.validate();
  return spec;
}

int run_sweep(const SweepSpec& spec, const SearchConfig& cfg, std::ostream& out) {
  spec.validate();
  out << spec.varying_param << ",mmc,correlation_distance,negativity,d1,t1,t2,t3,status\n";
  int invalid = 0;
  for (int step = 0; step < spec.steps; ++step) {
    const double value = spec.value_at(step);
    StateSpec state = spec.fixed;
    state.params[spec.varying_param] = {value};
    out << format_double(value);
    try {
      const MeasureReport r = full_report(build_state(state), cfg);
      for (double v : {r.mmc, r.correlation_distance, r.negativity, r.d1, r.singular_values[0],
                       r.singular_values[1], r.singular_values[2]}) {
        out << ',' << format_double(v);
      }
      out << ",ok\n";
    } catch (const InvalidState& e) {
      ++invalid;
      out << ",,,,,,,,invalid:" << e.invariant() << '\n';
    }
  }
  return invalid;
}

}  // namespace qcorr
