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

// Command-line front end: single-state reports, parameter sweeps and the
// reproduction suite.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qcorr/error.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/state_spec.hpp"
#include "qcorr/sweep.hpp"
#include "qcorr/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvalidState = 3;
constexpr int kExitVerifyFailed = 4;

struct Options {
  std::string spec_file;
  std::string inline_record;
  std::string out_path;
  std::string grid;
  std::optional<int> refine;
  std::optional<std::uint64_t> seed;
  std::string filter;
  double tolerance_scale = 1.0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qcorr::ParseError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string record_text(const Options& opt) {
  if (!opt.spec_file.empty() && !opt.inline_record.empty()) {
    throw qcorr::ParseError("give either --spec or --inline, not both");
  }
  if (!opt.spec_file.empty()) return read_file(opt.spec_file);
  if (!opt.inline_record.empty()) return opt.inline_record;
  throw qcorr::ParseError("a record is required via --spec <file> or --inline <record>");
}

qcorr::SearchConfig search_config(const Options& opt) {
  qcorr::SearchConfig cfg;
  if (!opt.grid.empty()) {
    static const std::regex kGrid(R"((\d+)x(\d+))");
    std::smatch m;
    if (!std::regex_match(opt.grid, m, kGrid)) {
      throw qcorr::ParseError("--grid expects <ntheta>x<nphi>, got '" + opt.grid + "'");
    }
    cfg.grid_theta = std::stoi(m[1]);
    cfg.grid_phi = std::stoi(m[2]);
  }
  if (opt.refine) cfg.refine_iters = *opt.refine;
  if (opt.seed) cfg.seed = *opt.seed;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw qcorr::ParseError(e.what());
  }
  return cfg;
}

void add_search_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--grid", opt.grid, "Oracle coarse grid, <ntheta>x<nphi> (default 64x128)");
  cmd->add_option("--refine", opt.refine, "Oracle refinement iterations (default 40)");
  cmd->add_option("--seed", opt.seed, "Seed for randomized checks and oracle starts");
}

int cmd_measures(const Options& opt) {
  const qcorr::SearchConfig cfg = search_config(opt);
  const qcorr::StateSpec spec = qcorr::parse_state_spec(record_text(opt));
  const qcorr::DensityMatrix rho = qcorr::build_state(spec);
  std::cout << qcorr::report_to_json(qcorr::full_report(rho, cfg)) << '\n';
  return kExitOk;
}

int cmd_sweep(const Options& opt) {
  const qcorr::SearchConfig cfg = search_config(opt);
  const qcorr::SweepSpec spec = qcorr::parse_sweep_spec(record_text(opt));
  if (opt.out_path.empty()) {
    qcorr::run_sweep(spec, cfg, std::cout);
    return kExitOk;
  }
  std::ofstream out(opt.out_path);
  if (!out) throw qcorr::ParseError("cannot open '" + opt.out_path + "' for writing");
  const int invalid = qcorr::run_sweep(spec, cfg, out);
  std::cerr << spec.steps << " rows written to " << opt.out_path;
  if (invalid > 0) std::cerr << " (" << invalid << " invalid)";
  std::cerr << '\n';
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  qcorr::VerifyOptions options;
  options.search = search_config(opt);
  options.filter = opt.filter;
  options.tolerance_scale = opt.tolerance_scale;
  const auto results = qcorr::run_verify(options);
  int failed = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    std::printf("%s  %-44s expected=%-22s actual=%-22s tol=%s\n", r.passed ? "PASS" : "FAIL",
                r.check_id.c_str(), qcorr::format_double(r.expected).c_str(),
                qcorr::format_double(r.actual).c_str(), qcorr::format_double(r.tolerance).c_str());
  }
  std::printf("%zu checks, %d failed\n", results.size(), failed);
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlation measures for two-qubit states"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* measures = app.add_subcommand("measures", "Report M, C, N and D1 for one state");
  measures->add_option("--spec", opt.spec_file, "State record file (JSON)");
  measures->add_option("--inline", opt.inline_record, "State record given inline (JSON)");
  add_search_flags(measures, opt);

  CLI::App* sweep = app.add_subcommand("sweep", "Vary one parameter and write CSV rows");
  sweep->add_option("--spec", opt.spec_file, "Sweep record file (JSON)");
  sweep->add_option("--inline", opt.inline_record, "Sweep record given inline (JSON)");
  sweep->add_option("--out", opt.out_path, "Output CSV path (default: stdout)");
  add_search_flags(sweep, opt);

  CLI::App* verify = app.add_subcommand("verify", "Run the reproduction checks");
  verify->add_option("--filter", opt.filter, "Only run checks whose id starts with this prefix");
  verify->add_option("--tolerance-scale", opt.tolerance_scale,
                     "Multiply every tolerance (harness self-test)");
  add_search_flags(verify, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (measures->parsed()) return cmd_measures(opt);
    if (sweep->parsed()) return cmd_sweep(opt);
    return cmd_verify(opt);
  } catch (const qcorr::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const qcorr::InvalidState& e) {
    std::cerr << "invalid state (" << e.invariant() << "): " << e.what() << '\n';
    return kExitInvalidState;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}
