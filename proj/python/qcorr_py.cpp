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

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>

#include "qcorr/error.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/oracles.hpp"
#include "qcorr/state_spec.hpp"
#include "qcorr/states.hpp"
#include "qcorr/verify.hpp"

namespace py = pybind11;
using namespace qcorr;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix matrix_from_array(const ComplexArray& arr) {
  if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1)) {
    throw DimensionError("expected a square 2-D array");
  }
  const int n = static_cast<int>(arr.shape(0));
  ComplexMatrix m(n);
  auto view = arr.unchecked<2>();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = view(i, j);
  }
  return m;
}

py::array_t<Complex> array_from_matrix(const ComplexMatrix& m) {
  py::array_t<Complex> out({m.dim(), m.dim()});
  auto view = out.mutable_unchecked<2>();
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) view(i, j) = m(i, j);
  }
  return out;
}

py::array_t<double> array_from_real3(const RealMatrix3& q) {
  py::array_t<double> out({3, 3});
  auto view = out.mutable_unchecked<2>();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) view(i, j) = q(i, j);
  }
  return out;
}

BlochVector bloch(const std::array<double, 3>& v) { return BlochVector(v); }

py::dict report_dict(const MeasureReport& r) {
  py::dict d;
  d["mmc"] = r.mmc;
  d["correlation_distance"] = r.correlation_distance;
  d["negativity"] = r.negativity;
  d["d1"] = r.d1;
  d["d1_method"] = std::string(to_string(r.d1_method));
  d["singular_values"] = r.singular_values;
  d["bloch_a"] = r.bloch_a.components();
  d["bloch_b"] = r.bloch_b.components();
  return d;
}

}  // namespace

PYBIND11_MODULE(_qcorr, m) {
  m.doc() = "Correlation measures for two-qubit states";

  py::register_exception<InvalidState>(m, "InvalidStateError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NumericalDegeneracy>(m, "NumericalDegeneracy", PyExc_ArithmeticError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);

  py::class_<SearchConfig>(m, "SearchConfig")
      .def(py::init<>())
      .def_readwrite("grid_theta", &SearchConfig::grid_theta)
      .def_readwrite("grid_phi", &SearchConfig::grid_phi)
      .def_readwrite("refine_iters", &SearchConfig::refine_iters)
      .def_readwrite("refine_shrink", &SearchConfig::refine_shrink)
      .def_readwrite("seed", &SearchConfig::seed);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init([](const ComplexArray& arr) { return DensityMatrix(matrix_from_array(arr)); }),
           py::arg("matrix"))
      .def("matrix", [](const DensityMatrix& rho) { return array_from_matrix(rho.matrix()); })
      .def("__repr__", [](const DensityMatrix&) { return std::string("<qcorr.DensityMatrix 4x4>"); });

  m.def("pure_state", &pure_state, py::arg("n"));
  m.def(
      "cq_state",
      [](double p1, double theta, double phi, const std::array<double, 3>& a1,
         const std::array<double, 3>& a2) { return cq_state(p1, theta, phi, bloch(a1), bloch(a2)); },
      py::arg("p1"), py::arg("theta"), py::arg("phi"), py::arg("a1"), py::arg("a2"));
  m.def(
      "cc_state",
      [](const std::array<std::array<double, 2>, 2>& p, double theta_a, double phi_a,
         std::optional<double> theta_b, std::optional<double> phi_b) {
        return cc_state(ProbTable2x2{p}, theta_a, phi_a, theta_b.value_or(theta_a),
                        phi_b.value_or(phi_a));
      },
      py::arg("p"), py::arg("theta_a") = 0.0, py::arg("phi_a") = 0.0,
      py::arg("theta_b") = py::none(), py::arg("phi_b") = py::none());
  m.def(
      "x_state",
      [](double r11, double r22, double r33, double r44, double r14, double r23) {
        return x_state({r11, r22, r33, r44, r14, r23});
      },
      py::arg("rho11"), py::arg("rho22"), py::arg("rho33"), py::arg("rho44"),
      py::arg("rho14") = 0.0, py::arg("rho23") = 0.0);
  m.def("rho_d", &rho_d, py::arg("w"), py::arg("s"));
  m.def("rho_d_s_max", &rho_d_s_max, py::arg("w"));
  m.def("rho_theta", &rho_theta, py::arg("theta"));
  m.def("bell_diagonal", &bell_diagonal, py::arg("c1"), py::arg("c2"), py::arg("c3"));
  m.def("state_from_spec", [](const std::string& text) { return build_state(parse_state_spec(text)); },
        py::arg("record"));

  m.def("partial_transpose",
        [](const DensityMatrix& rho) { return array_from_matrix(partial_transpose(rho)); });
  m.def("bloch_vectors", [](const DensityMatrix& rho) {
    const auto [a, b] = bloch_vectors(rho);
    return py::make_tuple(a.components(), b.components());
  });
  m.def("covariance_matrix",
        [](const DensityMatrix& rho) { return array_from_real3(covariance_matrix(rho)); });
  m.def("singular_values",
        [](const DensityMatrix& rho) { return singular_values_3(covariance_matrix(rho)); });

  m.def("mmc", &mmc, py::arg("rho"));
  m.def("correlation_distance", py::overload_cast<const DensityMatrix&>(&correlation_distance),
        py::arg("rho"));
  m.def("negativity", &negativity, py::arg("rho"));
  m.def(
      "d1_x_state",
      [](double r11, double r22, double r33, double r44, double r14, double r23,
         const SearchConfig& cfg) {
        const D1Result r = d1_x_state({r11, r22, r33, r44, r14, r23}, cfg);
        return py::make_tuple(r.value, std::string(to_string(r.method)));
      },
      py::arg("rho11"), py::arg("rho22"), py::arg("rho33"), py::arg("rho44"),
      py::arg("rho14") = 0.0, py::arg("rho23") = 0.0, py::arg("cfg") = SearchConfig{});
  m.def(
      "full_report",
      [](const DensityMatrix& rho, const SearchConfig& cfg) { return report_dict(full_report(rho, cfg)); },
      py::arg("rho"), py::arg("cfg") = SearchConfig{});
  m.def(
      "report_json",
      [](const DensityMatrix& rho, const SearchConfig& cfg) { return report_to_json(full_report(rho, cfg)); },
      py::arg("rho"), py::arg("cfg") = SearchConfig{});

  m.def("d1_oracle", &d1_oracle, py::arg("rho"), py::arg("cfg") = SearchConfig{},
        py::call_guard<py::gil_scoped_release>());
  m.def("mmc_oracle", &mmc_oracle, py::arg("rho"), py::arg("cfg") = SearchConfig{});
  m.def(
      "measurement_map",
      [](const DensityMatrix& rho, double theta, double phi) { return measurement_map(rho, theta, phi); },
      py::arg("rho"), py::arg("theta"), py::arg("phi"));
  m.def("classical_cov", [](const std::array<std::array<double, 2>, 2>& p) {
    return classical_cov(ProbTable2x2{p});
  });
  m.def("classical_cov_moments", [](const std::array<std::array<double, 2>, 2>& p) {
    return classical_cov_moments(ProbTable2x2{p});
  });

  m.def(
      "run_verify",
      [](const std::string& filter, const SearchConfig& cfg) {
        VerifyOptions opt;
        opt.filter = filter;
        opt.search = cfg;
        py::list out;
        std::vector<VerifyResult> results;
        {
          py::gil_scoped_release release;
          results = run_verify(opt);
        }
        for (const auto& r : results) {
          py::dict d;
          d["check_id"] = r.check_id;
          d["criterion"] = r.criterion;
          d["expected"] = r.expected;
          d["actual"] = r.actual;
          d["tolerance"] = r.tolerance;
          d["passed"] = r.passed;
          out.append(d);
        }
        return out;
      },
      py::arg("filter") = "", py::arg("cfg") = SearchConfig{});
}
