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

#include "qcorr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qcorr/measures.hpp"
#include "qcorr/sampling.hpp"
#include "qcorr/state_spec.hpp"

namespace qcorr {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

class Suite {
 public:
  explicit Suite(const VerifyOptions& options) : options_(options) {}

  // True if any check under `group` can pass the filter.
  bool wants(const std::string& group) const {
    const std::string& f = options_.filter;
    return f.empty() || group.starts_with(f) || f.starts_with(group);
  }

  void check(const std::string& id, int criterion, double expected, double actual,
             double tolerance) {
    if (!id.starts_with(options_.filter)) return;
    // A negative scale must fail exact (zero-tolerance) checks too, so it
    // never yields -0.
    const double scale = options_.tolerance_scale;
    const double tol = scale < 0.0 ? std::min(tolerance * scale, -1.0) : tolerance * scale;
    const bool passed = std::abs(expected - actual) <= tol;
    results_.push_back({id, criterion, expected, actual, tol, passed});
  }

  // Largest deviation over a sample, checked against zero.
  void check_max(const std::string& id, int criterion, double max_error, double tolerance) {
    check(id, criterion, 0.0, max_error, tolerance);
  }

  const SearchConfig& search() const { return options_.search; }
  sampling::Rng rng(std::uint64_t stream) const {
    return sampling::Rng(options_.search.seed * 1000003ULL + stream);
  }
  std::vector<VerifyResult> take() { return std::move(results_); }

 private:
  const VerifyOptions& options_;
  std::vector<VerifyResult> results_;
};

// Accumulates max |a - b| over a sample.
struct MaxError {
  double value = 0.0;
  void add(double a, double b) { value = std::max(value, std::abs(a - b)); }
  void add(double err) { value = std::max(value, std::abs(err)); }
};

double d1_closed_or_routed(const DensityMatrix& rho, const SearchConfig& cfg, D1Method* method) {
  const D1Result r = d1_x_state(*x_params_of(rho), cfg);
  if (method != nullptr) *method = r.method;
  return r.value;
}

double bd_intermediate(std::array<double, 3> c) {
  for (double& v : c) v = std::abs(v);
  std::sort(c.begin(), c.end());
  return c[1];
}

double bd_largest(const std::array<double, 3>& c) {
  return std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2])});
}

void pure_states(Suite& s) {
  constexpr int kCrit = 1;
  int chain_violations = 0;
  for (double n : {0.1, 0.25, 0.6, 0.9, 1.0}) {
    const std::string id = "pure.n=" + format_double(n) + ".";
    const DensityMatrix rho = pure_state(n);
    const double neg = negativity(rho);
    const double m = mmc(rho);
    const double c = correlation_distance(rho);
    D1Method method{};
    const double d1 = d1_closed_or_routed(rho, s.search(), &method);
    const double d1_oracle_value = d1_oracle(rho, s.search());
    s.check(id + "negativity", kCrit, n, neg, kClosedFormTol);
    s.check(id + "d1_closed_form", kCrit, n, d1,
            method == D1Method::ClosedForm ? kClosedFormTol : kOracleTol);
    s.check(id + "d1_oracle", kCrit, n, d1_oracle_value, kOracleTol);
    s.check(id + "mmc", kCrit, n, m, kClosedFormTol);
    s.check(id + "correlation_distance", kCrit, n + 0.5 * n * n, c, kClosedFormTol);
    if (!(m < c)) ++chain_violations;
  }
  s.check("pure.chain_mmc_below_cd", kCrit, 0, chain_violations, 0);
}

void classical_quantum(Suite& s) {
  constexpr int kCrit = 2;
  auto rng = s.rng(2);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  MaxError mmc_err, cd_err, d1_max, neg_max;
  int at_or_above_one = 0;
  for (int k = 0; k < 200; ++k) {
    const double p1 = unif(rng);
    const double theta = kPi * unif(rng);
    const double phi = 2 * kPi * unif(rng);
    const BlochVector a1 = sampling::bloch_in_ball(rng);
    const BlochVector a2 = sampling::bloch_in_ball(rng);
    const DensityMatrix rho = cq_state(p1, theta, phi, a1, a2);
    const double dist = std::hypot(a1.x() - a2.x(), a1.y() - a2.y(), a1.z() - a2.z());
    const double m = mmc(rho);
    mmc_err.add(m, 2 * p1 * (1 - p1) * dist);
    cd_err.add(correlation_distance(rho), m);
    d1_max.add(d1_oracle(rho, s.search()));
    neg_max.add(negativity(rho));
    if (m >= 1.0) ++at_or_above_one;
  }
  s.check_max("cq.mmc_formula", kCrit, mmc_err.value, kClosedFormTol);
  s.check_max("cq.cd_equals_mmc", kCrit, cd_err.value, kClosedFormTol);
  s.check_max("cq.d1_oracle_zero", kCrit, d1_max.value, 1e-6);
  s.check_max("cq.negativity_zero", kCrit, neg_max.value, kClosedFormTol);

  // Approach to the orthogonal-projector limit: p1 = 1/2, a2 = -a1, |a1| -> 1.
  MaxError limit_err;
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
    const double r = 1.0 - eps;
    const double m = mmc(cq_state(0.5, 0.3, 1.1, BlochVector(0, r * 0.6, r * 0.8),
                                  BlochVector(0, -r * 0.6, -r * 0.8)));
    limit_err.add(m, r);
    if (m >= 1.0) ++at_or_above_one;
  }
  s.check_max("cq.limit_sequence", kCrit, limit_err.value, kClosedFormTol);
  s.check("cq.genuine_below_one", kCrit, 0, at_or_above_one, 0);
  const double m_limit =
      mmc(cq_state(0.5, 0.3, 1.1, BlochVector(0, 0.6, 0.8), BlochVector(0, -0.6, -0.8)));
  s.check("cq.orthogonal_limit", kCrit, 1.0, m_limit, kClosedFormTol);
}

void classical_classical(Suite& s) {
  constexpr int kCrit = 3;
  auto rng = s.rng(3);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  MaxError mmc_err, path_err, cd_err, d1_max, neg_max;
  for (int k = 0; k < 200; ++k) {
    const ProbTable2x2 p = sampling::prob_table(rng);
    const double ta = 0.5 * angle(rng), pa = angle(rng), tb = 0.5 * angle(rng), pb = angle(rng);
    const DensityMatrix rho = cc_state(p, ta, pa, tb, pb);
    const double m = mmc(rho);
    mmc_err.add(m, std::abs(classical_cov(p)));
    path_err.add(classical_cov(p), classical_cov_moments(p));
    cd_err.add(correlation_distance(rho), m);
    d1_max.add(d1_oracle(rho, s.search()));
    neg_max.add(negativity(rho));
  }
  s.check_max("cc.mmc_equals_abs_cov", kCrit, mmc_err.value, kClosedFormTol);
  s.check_max("cc.cov_paths_agree", kCrit, path_err.value, 1e-14);
  s.check_max("cc.cd_equals_mmc", kCrit, cd_err.value, kClosedFormTol);
  s.check_max("cc.d1_oracle_zero", kCrit, d1_max.value, 1e-6);
  s.check_max("cc.negativity_zero", kCrit, neg_max.value, kClosedFormTol);

  const ProbTable2x2 spot{{{{0.4, 0.1}, {0.2, 0.3}}}};
  s.check("cc.spot.mmc", kCrit, 0.4, mmc(cc_state(spot, 0, 0, 0, 0)), kClosedFormTol);
  s.check("cc.spot.cov_closed", kCrit, 0.4, classical_cov(spot), kClosedFormTol);
  s.check("cc.spot.cov_moments", kCrit, 0.4, classical_cov_moments(spot), kClosedFormTol);
}

double rho_d_discord(double w, double s) {
  const double g = std::abs(1 - 4 * w);
  return 4 * s * g / std::sqrt(16 * s * s + g * g);
}

void discordant_separable(Suite& s) {
  constexpr int kCrit = 4;
  MaxError mmc_err, cd_err, neg_max, d1_err, d1_oracle_err;
  int strict_violations = 0;
  for (int iw = 1; iw <= 9; ++iw) {
    const double w = 0.05 * iw;
    for (double frac : {0.1, 0.25, 0.5, 0.75, 1.0}) {
      const double sc = frac * rho_d_s_max(w);
      const DensityMatrix rho = rho_d(w, sc);
      const MeasureReport r = full_report(rho, s.search());
      const double expected_d1 = rho_d_discord(w, sc);
      mmc_err.add(r.mmc, 4 * sc);
      cd_err.add(r.correlation_distance, 4 * sc);
      neg_max.add(r.negativity);
      d1_err.add(r.d1, expected_d1);
      d1_oracle_err.add(d1_oracle(rho, s.search()), expected_d1);
      if (iw != 5 && !(r.d1 < r.mmc)) ++strict_violations;
    }
  }
  s.check_max("rho_d.mmc_equals_4s", kCrit, mmc_err.value, kClosedFormTol);
  s.check_max("rho_d.cd_equals_4s", kCrit, cd_err.value, kClosedFormTol);
  s.check_max("rho_d.negativity_zero", kCrit, neg_max.value, kClosedFormTol);
  s.check_max("rho_d.d1_closed_form", kCrit, d1_err.value, kClosedFormTol);
  s.check_max("rho_d.d1_oracle", kCrit, d1_oracle_err.value, kOracleTol);
  s.check("rho_d.d1_strictly_below_mmc", kCrit, 0, strict_violations, 0);

  const DensityMatrix spot = rho_d(0.1, 0.2);
  s.check("rho_d.spot.d1", kCrit, 0.48, full_report(spot, s.search()).d1, kClosedFormTol);
  s.check("rho_d.spot.d1_oracle", kCrit, 0.48, d1_oracle(spot, s.search()), kOracleTol);
  s.check("rho_d.spot.mmc", kCrit, 0.8, mmc(spot), kClosedFormTol);
  s.check("rho_d.w=0.25.d1_zero", kCrit, 0.0, full_report(rho_d(0.25, 0.25), s.search()).d1,
          kClosedFormTol);
}

void entangled(Suite& s) {
  constexpr int kCrit = 5;
  MaxError neg_err, d1_err, mmc_err, cd_err;
  int chain_violations = 0;
  for (int k = 1; k <= 50; ++k) {
    const double theta = k * (kPi / 2) / 51;
    const double s2 = std::sin(2 * theta);
    const DensityMatrix rho = rho_theta(theta);
    const MeasureReport r = full_report(rho, s.search());
    neg_err.add(r.negativity, (std::sqrt(6 - 2 * std::cos(4 * theta)) - 2) / 4);
    d1_err.add(r.d1, 0.5 * s2);
    mmc_err.add(r.mmc, 0.5 * s2);
    cd_err.add(r.correlation_distance, 0.5 * s2 + s2 * s2 / 8);
    const bool chain = r.negativity < r.d1 && std::abs(r.d1 - r.mmc) <= kClosedFormTol &&
                       r.mmc < r.correlation_distance;
    if (!chain) ++chain_violations;
  }
  s.check_max("rho_theta.negativity", kCrit, neg_err.value, kClosedFormTol);
  s.check_max("rho_theta.d1_closed_form", kCrit, d1_err.value, kClosedFormTol);
  s.check_max("rho_theta.mmc", kCrit, mmc_err.value, kClosedFormTol);
  s.check_max("rho_theta.correlation_distance", kCrit, cd_err.value, kClosedFormTol);
  s.check("rho_theta.strict_chain", kCrit, 0, chain_violations, 0);

  const DensityMatrix spot = rho_theta(kPi / 4);
  const MeasureReport r = full_report(spot, s.search());
  s.check("rho_theta.spot.negativity", kCrit, 0.2071067812, r.negativity, kClosedFormTol);
  s.check("rho_theta.spot.d1", kCrit, 0.5, r.d1, kClosedFormTol);
  s.check("rho_theta.spot.d1_oracle", kCrit, 0.5, d1_oracle(spot, s.search()), kOracleTol);
  s.check("rho_theta.spot.mmc", kCrit, 0.5, r.mmc, kClosedFormTol);
  s.check("rho_theta.spot.correlation_distance", kCrit, 0.625, r.correlation_distance,
          kClosedFormTol);
}

void bell_diagonal_states(Suite& s) {
  constexpr int kCrit = 6;
  auto rng = s.rng(6);
  MaxError d1_err, d1_oracle_err, mmc_err;
  int chain_violations = 0;
  int oracle_chain_violations = 0;
  for (int k = 0; k < 500; ++k) {
    const auto c = sampling::bell_coefficients(rng);
    const DensityMatrix rho = bell_diagonal(c[0], c[1], c[2]);
    const MeasureReport r = full_report(rho, s.search());
    const double d1o = d1_oracle(rho, s.search());
    d1_err.add(r.d1, bd_intermediate(c));
    d1_oracle_err.add(d1o, bd_intermediate(c));
    mmc_err.add(r.mmc, bd_largest(c));
    constexpr double t = kClosedFormTol;
    if (!(r.negativity <= r.d1 + t && r.d1 <= r.mmc + t && r.mmc <= r.correlation_distance + t)) {
      ++chain_violations;
    }
    if (!(r.negativity <= d1o + kOracleTol && d1o <= r.mmc + kOracleTol)) ++oracle_chain_violations;
  }
  s.check_max("bell_diagonal.d1_closed_form", kCrit, d1_err.value, kClosedFormTol);
  s.check_max("bell_diagonal.d1_oracle", kCrit, d1_oracle_err.value, kOracleTol);
  s.check_max("bell_diagonal.mmc", kCrit, mmc_err.value, kClosedFormTol);
  s.check("bell_diagonal.chain", kCrit, 0, chain_violations, 0);
  s.check("bell_diagonal.chain_oracle", kCrit, 0, oracle_chain_violations, 0);

  const MeasureReport r = full_report(bell_diagonal(0.5, -0.3, 0.2), s.search());
  s.check("bell_diagonal.spot.d1", kCrit, 0.3, r.d1, kClosedFormTol);
  s.check("bell_diagonal.spot.mmc", kCrit, 0.5, r.mmc, kClosedFormTol);
  s.check("bell_diagonal.spot.negativity", kCrit, 0.0, r.negativity, kClosedFormTol);
}

// Correlation distance straight from its definition ‖ρ - ρ_A ⊗ ρ_B‖₁.
double correlation_distance_by_definition(const DensityMatrix& rho) {
  const ComplexMatrix product =
      kron(partial_trace(rho, Subsystem::A), partial_trace(rho, Subsystem::B));
  return trace_norm_hermitian(rho.matrix() - product);
}

void global_bound(Suite& s) {
  constexpr int kCrit = 7;
  auto rng = s.rng(7);
  int violations = 0;
  MaxError cd_err;
  for (int k = 0; k < 10000; ++k) {
    const DensityMatrix rho = sampling::density_matrix(rng);
    const SingularValues3 t = singular_values_3(covariance_matrix(rho));
    const double c = correlation_distance_from_singular_values(t);
    if (t[0] > c + kClosedFormTol) ++violations;
    cd_err.add(c, correlation_distance_by_definition(rho));
  }
  s.check("global.mmc_below_cd_violations", kCrit, 0, violations, 0);
  s.check_max("global.cd_formula_vs_definition", kCrit, cd_err.value, kClosedFormTol);
}

void oracle_consistency(Suite& s) {
  constexpr int kCrit = 8;
  auto rng = s.rng(8);
  MaxError mmc_err, d1_err;
  for (int k = 0; k < 500; ++k) {
    const XStateParams p = sampling::x_state_params(rng);
    const DensityMatrix rho = x_state(p);
    mmc_err.add(mmc_oracle(rho, s.search()), mmc(rho));
    d1_err.add(d1_x_state(p, s.search()).value, d1_oracle(rho, s.search()));
  }
  s.check_max("oracle.mmc_agreement", kCrit, mmc_err.value, 1e-9);
  s.check_max("oracle.d1_x_state_agreement", kCrit, d1_err.value, kOracleTol);

  // x = 0 and |α1| = |α2| = |α3|: the closed form does not apply.
  struct Degenerate {
    const char* name;
    XStateParams params;
    double expected;
  };
  const Degenerate cases[] = {
      {"bell_diagonal_0.3", bell_diagonal_params(0.3, 0.3, 0.3), 0.3},
      {"bell_state", bell_diagonal_params(1.0, -1.0, 1.0), 1.0},
      {"maximally_mixed", XStateParams{}, 0.0},
  };
  int misrouted = 0;
  for (const Degenerate& d : cases) {
    const D1Result r = d1_x_state(d.params, s.search());
    if (r.method != D1Method::Oracle || !std::isfinite(r.value)) ++misrouted;
    s.check(std::string("oracle.degenerate.") + d.name, kCrit, d.expected, r.value, kOracleTol);
  }
  s.check("oracle.degenerate_routing", kCrit, 0, misrouted, 0);
}

void conjecture(Suite& s) {
  constexpr int kCrit = 9;
  auto rng = s.rng(9);
  int violations = 0;
  for (int k = 0; k < 10000; ++k) {
    const DensityMatrix rho = sampling::density_matrix(rng);
    const double threshold = mmc(rho) + kOracleTol;
    if (d1_upper_bound(rho, threshold, s.search()) > threshold) ++violations;
  }
  // Informational: the inequality is conjectured, so any count passes.
  s.check("conjecture.d1_above_mmc_count", kCrit, 0, violations, kInf);
}

}  // namespace

const std::vector<std::string>& criterion_titles() {
  static const std::vector<std::string> kTitles{
      "",
      "pure states: N = D1 = M = n, C = n + n^2/2",
      "classical-quantum: M = 2 p1 p2 |a1 - a2|, C = M, D1 = N = 0",
      "classical-classical: M = |Cov(X,Y)|, C = M, D1 = N = 0",
      "discordant separable rho_d: M = C = 4s, closed-form D1 < M, N = 0",
      "entangled rho_theta: N < D1 = M < C",
      "Bell-diagonal: D1 = c0, M = c+, N <= D1 <= M <= C",
      "global bound: M <= C on random states",
      "oracle consistency and degenerate routing",
      "conjecture sweep: D1 <= M (informational)",
  };
  return kTitles;
}

std::vector<VerifyResult> run_verify(const VerifyOptions& options) {
  options.search.validate();
  Suite suite(options);
  const std::pair<const char*, void (*)(Suite&)> groups[] = {
      {"pure.", pure_states},
      {"cq.", classical_quantum},
      {"cc.", classical_classical},
      {"rho_d.", discordant_separable},
      {"rho_theta.", entangled},
      {"bell_diagonal.", bell_diagonal_states},
      {"global.", global_bound},
      {"oracle.", oracle_consistency},
      {"conjecture.", conjecture},
  };
  for (const auto& [prefix, run] : groups) {
    if (suite.wants(prefix)) run(suite);
  }
  return suite.take();
}

}  // namespace qcorr
