// Copyright 2026 The qslkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qslkit/cli.hpp"
#include "qslkit/errors.hpp"
#include "qslkit/experiments.hpp"
#include "qslkit/metrics.hpp"
#include "qslkit/qsl.hpp"

namespace py = pybind11;
using namespace qslkit;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const ComplexArray& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
    throw InvalidInput("expected a square 2-d array");
  }
  const auto n = static_cast<std::size_t>(a.shape(0));
  return ComplexMatrix(n, std::vector<Complex>(a.data(), a.data() + n * n));
}

py::array_t<Complex> to_array(const ComplexMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.dim());
  py::array_t<Complex> out({n, n});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

JcmParams make_params(double gamma0, double lambda, double omega0) {
  JcmParams p;
  p.gamma0 = gamma0;
  p.lambda = lambda;
  p.omega0 = omega0;
  p.validate();
  return p;
}

py::object optional_value(const std::optional<double>& v) {
  return v ? py::cast(*v) : py::none();
}

py::dict report_dict(const QslReport& r) {
  py::dict d;
  d["bures_angle"] = r.bures.radians;
  d["sin2"] = r.sin2;
  d["lambda_op"] = r.norms.lambda_op;
  d["lambda_hs"] = r.norms.lambda_hs;
  d["lambda_tr"] = r.norms.lambda_tr;
  d["quadrature_error_estimate"] = r.norms.quadrature_error_estimate;
  d["bound_op"] = r.bound_op;
  d["bound_hs"] = r.bound_hs;
  d["bound_tr"] = r.bound_tr;
  d["tau_qsl"] = r.tau_qsl;
  d["attained_by"] = std::string(to_string(r.attained_by));
  d["tau"] = r.tau;
  return d;
}

py::dict row_dict(const SweepRow& r) {
  py::dict d;
  d["gamma0"] = r.gamma0;
  d["regime"] = std::string(to_string(r.regime));
  for (NormKind k : kAllNorms) {
    const std::string suffix(to_string(k));
    d[("lambda_" + suffix).c_str()] = optional_value(r.lambda(k));
    d[("bound_" + suffix).c_str()] = optional_value(r.bound(k));
  }
  d["sin2"] = r.sin2;
  d["tau_qsl"] = r.tau_qsl;
  d["fidelity"] = r.fidelity;
  d["error"] = r.error ? py::cast(*r.error) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_qslkit, m) {
  m.doc() = "Quantum speed limits for the damped Jaynes-Cummings model.";

  auto base = py::register_exception<Error>(m, "QslError", PyExc_RuntimeError);
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<InconsistentInput>(m, "InconsistentInput", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<PoleError>(m, "PoleError", base.ptr());
  py::register_exception<AccuracyError>(m, "AccuracyError", base.ptr());

  m.def("singular_values",
        [](const ComplexArray& a) { return singular_values(to_matrix(a)).values; },
        py::arg("matrix"), "Singular values in descending order.");
  m.def("schatten_norm",
        [](const ComplexArray& a, const std::string& norm) {
          return schatten_norm(to_matrix(a), parse_norm_kind(norm));
        },
        py::arg("matrix"), py::arg("norm") = "op",
        "Schatten norm; norm is one of op, hs, tr.");

  m.def("regime",
        [](double gamma0, double lambda) {
          return std::string(to_string(make_params(gamma0, lambda, 1.0).regime()));
        },
        py::arg("gamma0"), py::arg("lam") = 50.0);
  m.def("amplitude",
        [](double gamma0, double t, double lambda) {
          const Amplitude a = jcm_amplitude(make_params(gamma0, lambda, 1.0), t);
          return py::make_tuple(a.value, a.derivative);
        },
        py::arg("gamma0"), py::arg("t"), py::arg("lam") = 50.0,
        "Excited-state amplitude G(t) and its time derivative.");
  m.def("decay_rate",
        [](double gamma0, double t, double lambda) {
          return jcm_decay_rate(make_params(gamma0, lambda, 1.0), t);
        },
        py::arg("gamma0"), py::arg("t"), py::arg("lam") = 50.0);
  m.def("decay_rate_poles",
        [](double gamma0, double t_max, double lambda) {
          return jcm_decay_rate_poles(make_params(gamma0, lambda, 1.0), t_max);
        },
        py::arg("gamma0"), py::arg("t_max"), py::arg("lam") = 50.0);
  m.def("state",
        [](double gamma0, double t, const ComplexArray& rho0, double lambda) {
          const JcmParams p = make_params(gamma0, lambda, 1.0);
          return to_array(jcm_state(p, DensityMatrix(to_matrix(rho0)), t).matrix());
        },
        py::arg("gamma0"), py::arg("t"), py::arg("rho0"), py::arg("lam") = 50.0,
        "Closed-form density matrix at time t (index 0 is the excited state).");
  m.def("state_derivative",
        [](double gamma0, double t, const ComplexArray& rho0, double lambda) {
          const JcmParams p = make_params(gamma0, lambda, 1.0);
          return to_array(
              jcm_state_derivative(p, DensityMatrix(to_matrix(rho0)), t));
        },
        py::arg("gamma0"), py::arg("t"), py::arg("rho0"), py::arg("lam") = 50.0);

  m.def("fidelity",
        [](const std::vector<Complex>& psi, const ComplexArray& rho) {
          return fidelity(PureState(psi), DensityMatrix(to_matrix(rho)));
        },
        py::arg("psi"), py::arg("rho"));
  m.def("bures_angle",
        [](const std::vector<Complex>& psi, const ComplexArray& rho) {
          return bures_angle(PureState(psi), DensityMatrix(to_matrix(rho))).radians;
        },
        py::arg("psi"), py::arg("rho"));
  m.def("sin2_bures",
        [](const std::vector<Complex>& psi, const ComplexArray& rho) {
          return sin2_bures(PureState(psi), DensityMatrix(to_matrix(rho)));
        },
        py::arg("psi"), py::arg("rho"));

  m.def("qsl_time",
        [](double gamma0, double lambda, double omega0, double tau,
           std::optional<double> tol) {
          const JcmParams p = make_params(gamma0, lambda, omega0);
          return report_dict(jcm_qsl_time(p, excited_state(), tau,
                                          tol.value_or(default_tolerance(tau))));
        },
        py::arg("gamma0"), py::arg("lam") = 50.0, py::arg("omega0") = 1.0,
        py::arg("tau") = 1.0, py::arg("tol") = py::none(),
        "Speed-limit report for an excited initial state.");
  m.def("markovian_plateau",
        [](double gamma0, double tau, const std::string& norm) {
          return markovian_plateau(gamma0, tau, parse_norm_kind(norm));
        },
        py::arg("gamma0"), py::arg("tau") = 1.0, py::arg("norm") = "op");

  m.def("sweep",
        [](std::optional<std::vector<double>> gamma0_values, double gamma0_min,
           double gamma0_max, std::size_t count, const std::string& spacing,
           double lambda, double omega0, double tau, std::optional<double> tol,
           std::size_t workers) {
          SweepConfig c;
          if (gamma0_values) c.gamma0_values = *gamma0_values;
          c.gamma0_min = gamma0_min;
          c.gamma0_max = gamma0_max;
          c.count = count;
          if (spacing == "linear") {
            c.spacing = Spacing::kLinear;
          } else if (spacing != "log") {
            throw InvalidInput("spacing must be 'log' or 'linear'");
          }
          c.lambda = lambda;
          c.omega0 = omega0;
          c.tau = tau;
          c.tol = tol.value_or(0.0);
          c.workers = workers;
          std::vector<SweepRow> rows;
          {
            py::gil_scoped_release release;
            rows = sweep_coupling(c);
          }
          py::list out;
          for (const SweepRow& r : rows) out.append(row_dict(r));
          return out;
        },
        py::arg("gamma0_values") = py::none(), py::arg("gamma0_min") = 0.1,
        py::arg("gamma0_max") = 500.0, py::arg("count") = 60,
        py::arg("spacing") = "log", py::arg("lam") = 50.0, py::arg("omega0") = 1.0,
        py::arg("tau") = 1.0, py::arg("tol") = py::none(), py::arg("workers") = 1,
        "Coupling sweep; one dict per gamma0 value.");

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::vector<const char*> argv{"qslkit"};
          for (const auto& a : args) argv.push_back(a.c_str());
          std::ostringstream out, err;
          const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line tool in-process; returns (code, stdout, stderr).");
}
