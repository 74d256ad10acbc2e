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

#include "qcorr/state_spec.hpp"

#include <array>
#include <charconv>
#include <optional>

#include "json.hpp"
#include "qcorr/error.hpp"

namespace qcorr {
namespace {

using json = nlohmann::json;

struct ParamInfo {
  const char* name;
  std::size_t size;
  bool required;
};

const std::vector<ParamInfo>& param_table(Family family) {
  static const std::vector<ParamInfo> kPure{{"n", 1, true}};
  static const std::vector<ParamInfo> kCq{
      {"p1", 1, true}, {"theta", 1, false}, {"phi", 1, false}, {"a1", 3, true}, {"a2", 3, true}};
  static const std::vector<ParamInfo> kCc{{"p", 4, true},        {"theta_a", 1, false},
                                          {"phi_a", 1, false},   {"theta_b", 1, false},
                                          {"phi_b", 1, false}};
  static const std::vector<ParamInfo> kX{{"rho11", 1, true}, {"rho22", 1, true},
                                         {"rho33", 1, true}, {"rho44", 1, true},
                                         {"rho14", 1, false}, {"rho23", 1, false}};
  static const std::vector<ParamInfo> kRhoD{{"w", 1, true}, {"s", 1, true}};
  static const std::vector<ParamInfo> kRhoTheta{{"theta", 1, true}};
  static const std::vector<ParamInfo> kBell{{"c1", 1, true}, {"c2", 1, true}, {"c3", 1, true}};
  static const std::vector<ParamInfo> kRaw{{"re", 16, true}, {"im", 16, false}};
  switch (family) {
    case Family::Pure: return kPure;
    case Family::Cq: return kCq;
    case Family::Cc: return kCc;
    case Family::X: return kX;
    case Family::RhoD: return kRhoD;
    case Family::RhoTheta: return kRhoTheta;
    case Family::BellDiagonal: return kBell;
    case Family::Raw: return kRaw;
  }
  return kRaw;
}

const ParamInfo* find_param(Family family, const std::string& name) {
  for (const ParamInfo& info : param_table(family)) {
    if (name == info.name) return &info;
  }
  return nullptr;
}

void flatten(const json& value, const std::string& name, std::vector<double>& out) {
  if (value.is_number()) {
    out.push_back(value.get<double>());
  } else if (value.is_array()) {
    for (const json& item : value) flatten(item, name, out);
  } else {
    throw ParseError("parameter '" + name + "' must be a number or an array of numbers");
  }
}

class ParamReader {
 public:
  explicit ParamReader(const StateSpec& spec) : spec_(spec) {}

  std::optional<std::vector<double>> find(const std::string& name) const {
    const auto it = spec_.params.find(name);
    if (it == spec_.params.end()) return std::nullopt;
    return it->second;
  }
  std::vector<double> vec(const std::string& name) const {
    auto v = find(name);
    if (!v) {
      throw ParseError("family '" + std::string(to_string(spec_.family)) +
                       "' requires parameter '" + name + "'");
    }
    return *v;
  }
  double scalar(const std::string& name) const { return vec(name).at(0); }
  double scalar_or(const std::string& name, double fallback) const {
    const auto v = find(name);
    return v ? v->at(0) : fallback;
  }
  BlochVector bloch(const std::string& name) const {
    const auto v = vec(name);
    return BlochVector(v[0], v[1], v[2]);
  }

 private:
  const StateSpec& spec_;
};

}  // namespace

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::Pure: return "pure";
    case Family::Cq: return "cq";
    case Family::Cc: return "cc";
    case Family::X: return "x";
    case Family::RhoD: return "rho_d";
    case Family::RhoTheta: return "rho_theta";
    case Family::BellDiagonal: return "bell_diagonal";
    case Family::Raw: return "raw";
  }
  return "raw";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::Pure, Family::Cq, Family::Cc, Family::X, Family::RhoD,
                   Family::RhoTheta, Family::BellDiagonal, Family::Raw}) {
    if (name == to_string(f)) return f;
  }
  throw ParseError("unknown state family '" + std::string(name) + "'");
}

const std::vector<std::string>& scalar_params(Family family) {
  static const std::array<std::vector<std::string>, 8> kTable = [] {
    std::array<std::vector<std::string>, 8> table;
    for (int f = 0; f < 8; ++f) {
      for (const ParamInfo& info : param_table(static_cast<Family>(f))) {
        if (info.size == 1) table[f].push_back(info.name);
      }
    }
    return table;
  }();
  return kTable[static_cast<int>(family)];
}

StateSpec parse_state_params(Family family, std::string_view params_json) {
  json params;
  try {
    params = json::parse(params_json);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed params: ") + e.what());
  }
  if (!params.is_object()) throw ParseError("params must be an object");

  StateSpec spec;
  spec.family = family;
  for (const auto& [key, value] : params.items()) {
    std::string name = key;
    if (family == Family::Cc && (name == "theta" || name == "phi")) name += "_a";
    if (family == Family::BellDiagonal && name == "c") {
      std::vector<double> c;
      flatten(value, name, c);
      if (c.size() != 3) throw ParseError("parameter 'c' needs 3 values");
      for (int i = 0; i < 3; ++i) spec.params["c" + std::to_string(i + 1)] = {c[i]};
      continue;
    }
    const ParamInfo* info = find_param(family, name);
    if (info == nullptr) {
      throw ParseError("family '" + std::string(to_string(family)) + "' has no parameter '" +
                       key + "'");
    }
    std::vector<double> values;
    flatten(value, key, values);
    if (values.size() != info->size) {
      throw ParseError("parameter '" + key + "' needs " + std::to_string(info->size) +
                       " values, got " + std::to_string(values.size()));
    }
    spec.params[name] = std::move(values);
  }
  for (const ParamInfo& info : param_table(family)) {
    if (info.required && !spec.params.contains(info.name)) {
      throw ParseError("family '" + std::string(to_string(family)) + "' requires parameter '" +
                       info.name + "'");
    }
  }
  return spec;
}

StateSpec parse_state_spec(std::string_view text) {
  json record;
  try {
    record = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed state spec: ") + e.what());
  }
  if (!record.is_object()) throw ParseError("state spec must be an object");
  if (!record.contains("family") || !record["family"].is_string()) {
    throw ParseError("state spec needs a string field 'family'");
  }
  for (const auto& [key, value] : record.items()) {
    if (key != "family" && key != "params") throw ParseError("unexpected field '" + key + "'");
  }
  const Family family = family_from_string(record["family"].get<std::string>());
  const json params = record.value("params", json::object());
  return parse_state_params(family, params.dump());
}

DensityMatrix build_state(const StateSpec& spec) {
  const ParamReader r(spec);
  switch (spec.family) {
    case Family::Pure:
      return pure_state(r.scalar("n"));
    case Family::Cq:
      return cq_state(r.scalar("p1"), r.scalar_or("theta", 0.0), r.scalar_or("phi", 0.0),
                      r.bloch("a1"), r.bloch("a2"));
    case Family::Cc: {
      const auto p = r.vec("p");
      const ProbTable2x2 table{{{{p[0], p[1]}, {p[2], p[3]}}}};
      const double theta_a = r.scalar_or("theta_a", 0.0);
      const double phi_a = r.scalar_or("phi_a", 0.0);
      return cc_state(table, theta_a, phi_a, r.scalar_or("theta_b", theta_a),
                      r.scalar_or("phi_b", phi_a));
    }
    case Family::X:
      return x_state({r.scalar("rho11"), r.scalar("rho22"), r.scalar("rho33"), r.scalar("rho44"),
                      r.scalar_or("rho14", 0.0), r.scalar_or("rho23", 0.0)});
    case Family::RhoD:
      return rho_d(r.scalar("w"), r.scalar("s"));
    case Family::RhoTheta:
      return rho_theta(r.scalar("theta"));
    case Family::BellDiagonal:
      return bell_diagonal(r.scalar("c1"), r.scalar("c2"), r.scalar("c3"));
    case Family::Raw: {
      const auto re = r.vec("re");
      const auto im = r.find("im").value_or(std::vector<double>(16, 0.0));
      ComplexMatrix m(4);
      for (int k = 0; k < 16; ++k) m(k / 4, k % 4) = Complex(re[k], im[k]);
      return DensityMatrix(m);
    }
  }
  throw ParseError("unhandled family");
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return {buf.data(), result.ptr};
}

std::string report_to_json(const MeasureReport& report) {
  // Assembled by hand so every number goes through format_double.
  std::string out = "{";
  bool first = true;
  auto field = [&](const char* name, const std::string& text) {
    if (!first) out += ",";
    first = false;
    out += "\"";
    out += name;
    out += "\":";
    out += text;
  };
  field("mmc", format_double(report.mmc));
  field("correlation_distance", format_double(report.correlation_distance));
  field("negativity", format_double(report.negativity));
  field("d1", format_double(report.d1));
  field("d1_method", "\"" + std::string(to_string(report.d1_method)) + "\"");
  field("t1", format_double(report.singular_values[0]));
  field("t2", format_double(report.singular_values[1]));
  field("t3", format_double(report.singular_values[2]));
  static constexpr const char* kAxisA[] = {"bloch_a_x", "bloch_a_y", "bloch_a_z"};
  static constexpr const char* kAxisB[] = {"bloch_b_x", "bloch_b_y", "bloch_b_z"};
  for (int i = 0; i < 3; ++i) field(kAxisA[i], format_double(report.bloch_a[i]));
  for (int i = 0; i < 3; ++i) field(kAxisB[i], format_double(report.bloch_b[i]));
  out += "}";
  return out;
}

}  // namespace qcorr
