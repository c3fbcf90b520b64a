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

#include "qslkit/qsl.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qslkit/errors.hpp"
#include "qslkit/tolerances.hpp"

namespace qslkit {
namespace {

void require_tau(double tau, const char* op) {
  if (!std::isfinite(tau) || tau <= 0.0) {
    throw InvalidInput(std::string(op) + ": driving time must be finite and > 0");
  }
}

void require_sin2(double sin2, const char* op) {
  if (!std::isfinite(sin2) || sin2 < 0.0 || sin2 > 1.0) {
    throw InvalidInput(std::string(op) + ": sin^2 L must lie in [0, 1], got " +
                       std::to_string(sin2));
  }
}

double single_bound(double sin2, double average, const char* op) {
  if (!std::isfinite(average) || average < 0.0) {
    throw InvalidInput(std::string(op) + ": averaged norm must be finite and >= 0");
  }
  if (sin2 == 0.0) return 0.0;
  if (average == 0.0) {
    throw InconsistentInput(std::string(op) +
                            ": state moved while the generator norm vanished");
  }
  return sin2 / average;
}

bool is_uniform(std::span<const double> times) {
  const double h = (times.back() - times.front()) / (times.size() - 1);
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (std::abs((times[i] - times[i - 1]) - h) > 1e-9 * h) return false;
  }
  return true;
}

double integrate_samples(std::span<const double> times,
                         std::span<const double> values) {
  const std::size_t intervals = times.size() - 1;
  if (intervals % 2 == 0 && is_uniform(times)) {
    const double h = (times.back() - times.front()) / intervals;
    double sum = values.front() + values.back();
    for (std::size_t i = 1; i < intervals; ++i) {
      sum += (i % 2 == 1 ? 4.0 : 2.0) * values[i];
    }
    return sum * h / 3.0;
  }
  double sum = 0.0;
  for (std::size_t i = 1; i < times.size(); ++i) {
    sum += 0.5 * (times[i] - times[i - 1]) * (values[i] + values[i - 1]);
  }
  return sum;
}

}  // namespace

double AveragedNorms::value(NormKind kind) const noexcept {
  switch (kind) {
    case NormKind::kOperator:
      return lambda_op;
    case NormKind::kHilbertSchmidt:
      return lambda_hs;
    case NormKind::kTrace:
      return lambda_tr;
  }
  return 0.0;
}

double QslReport::bound(NormKind kind) const noexcept {
  switch (kind) {
    case NormKind::kOperator:
      return bound_op;
    case NormKind::kHilbertSchmidt:
      return bound_hs;
    case NormKind::kTrace:
      return bound_tr;
  }
  return 0.0;
}

double default_tolerance(double tau) noexcept {
  return tol::kQuadratureRelative * tau;
}

AveragedValue averaged_norm(const std::function<double(double)>& norm_samples,
                            double tau, double tol) {
  require_tau(tau, "averaged_norm");
  if (!(tol > 0.0)) throw InvalidInput("averaged_norm: tolerance must be > 0");
  QuadratureOptions options;
  options.abs_tol = tol;
  const QuadratureResult q =
      integrate_adaptive_simpson(norm_samples, 0.0, tau, options);
  return {q.value / tau, q.error_estimate / tau};
}

AveragedNorms averaged_norms(
    const std::function<ComplexMatrix(double)>& generator_output, double tau,
    double tol) {
  AveragedNorms out;
  out.tau = tau;
  for (NormKind kind : kAllNorms) {
    const AveragedValue avg = averaged_norm(
        [&](double t) { return schatten_norm(generator_output(t), kind); }, tau,
        tol);
    switch (kind) {
      case NormKind::kOperator:
        out.lambda_op = avg.value;
        break;
      case NormKind::kHilbertSchmidt:
        out.lambda_hs = avg.value;
        break;
      case NormKind::kTrace:
        out.lambda_tr = avg.value;
        break;
    }
    out.quadrature_error_estimate =
        std::max(out.quadrature_error_estimate, avg.error_estimate);
  }
  return out;
}

AveragedNorms jcm_averaged_norms(const JcmParams& params,
                                 const DensityMatrix& rho0, double tau,
                                 double tol) {
  params.validate();
  return averaged_norms(
      [&](double t) { return jcm_state_derivative(params, rho0, t); }, tau, tol);
}

double bound_from_norm(double sin2, double average) {
  require_sin2(sin2, "bound_from_norm");
  return single_bound(sin2, average, "bound_from_norm");
}

double ml_bound_open(double sin2, double lambda_op, double lambda_tr) {
  require_sin2(sin2, "ml_bound_open");
  return std::max(single_bound(sin2, lambda_op, "ml_bound_open"),
                  single_bound(sin2, lambda_tr, "ml_bound_open"));
}

double mt_bound_open(double sin2, double lambda_hs) {
  require_sin2(sin2, "mt_bound_open");
  return single_bound(sin2, lambda_hs, "mt_bound_open");
}

QslReport qsl_time(const PureState& psi0, const DensityMatrix& rho_tau,
                   const AveragedNorms& norms) {
  QslReport report;
  report.bures = bures_angle(psi0, rho_tau);
  report.sin2 = sin2_bures(psi0, rho_tau);
  report.norms = norms;
  report.tau = norms.tau;
  report.bound_op = single_bound(report.sin2, norms.lambda_op, "qsl_time");
  report.bound_hs = mt_bound_open(report.sin2, norms.lambda_hs);
  report.bound_tr = single_bound(report.sin2, norms.lambda_tr, "qsl_time");
  // Taken literally rather than assuming the operator-norm term dominates.
  report.tau_qsl = report.bound_op;
  report.attained_by = NormKind::kOperator;
  for (NormKind kind : {NormKind::kHilbertSchmidt, NormKind::kTrace}) {
    if (report.bound(kind) > report.tau_qsl) {
      report.tau_qsl = report.bound(kind);
      report.attained_by = kind;
    }
  }
  return report;
}

QslReport jcm_qsl_time(const JcmParams& params, const PureState& psi0,
                       double tau, double tol) {
  require_tau(tau, "jcm_qsl_time");
  const DensityMatrix rho0 = psi0.projector();
  const DensityMatrix rho_tau = jcm_state(params, rho0, tau);
  return qsl_time(psi0, rho_tau, jcm_averaged_norms(params, rho0, tau, tol));
}

UnitaryBoundReport ml_bound_unitary(
    const std::function<ComplexMatrix(double)>& hamiltonian,
    const Trajectory& trajectory, const PureState& psi0, double hbar) {
  if (trajectory.size() < 2 || trajectory.states.size() != trajectory.size()) {
    throw InvalidInput("ml_bound_unitary: trajectory needs at least two states");
  }
  if (!(hbar > 0.0)) throw InvalidInput("ml_bound_unitary: hbar must be > 0");
  std::vector<double> energies(trajectory.size());
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const ComplexMatrix h = hamiltonian(trajectory.times[i]);
    const std::vector<double> spectrum = hermitian_eigenvalues(h);
    if (spectrum.back() < tol::kHamiltonianSpectrum) {
      throw PreconditionError(
          "ml_bound_unitary: H_t has eigenvalue " + std::to_string(spectrum.back()) +
          " at t = " + std::to_string(trajectory.times[i]) +
          "; shift the zero of energy so that the spectrum is nonnegative");
    }
    energies[i] = trace(h * trajectory.states[i].matrix()).real();
  }
  const double tau = trajectory.times.back() - trajectory.times.front();
  UnitaryBoundReport report;
  report.averaged_energy = integrate_samples(trajectory.times, energies) / tau;
  report.sin2 = sin2_bures(psi0, trajectory.states.back());
  if (report.sin2 == 0.0) return report;
  if (!(report.averaged_energy > 0.0)) {
    // Overlap roundoff on a stationary state is not motion.
    if (report.sin2 <= tol::kUnitNorm) return report;
    throw InconsistentInput(
        "ml_bound_unitary: state moved with zero averaged energy");
  }
  report.bound = hbar * report.sin2 / (2.0 * report.averaged_energy);
  return report;
}

double markovian_plateau(double gamma0, double tau, NormKind kind) {
  require_tau(tau, "markovian_plateau");
  if (!std::isfinite(gamma0) || gamma0 < 0.0) {
    throw InvalidInput("markovian_plateau: gamma0 must be finite and >= 0");
  }
  return plateau_constant(kind) / tau * -std::expm1(-gamma0 * tau);
}

}  // namespace qslkit
