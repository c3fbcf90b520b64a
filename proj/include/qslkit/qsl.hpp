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

#pragma once

#include <functional>
#include <span>

#include "qslkit/dynamics.hpp"
#include "qslkit/linalg.hpp"
#include "qslkit/metrics.hpp"
#include "qslkit/quadrature.hpp"

namespace qslkit {

/// Time average (1/tau) * integral over [0, tau] of a scalar.
struct AveragedValue {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Time-averaged Schatten norms of the generator output L_t(rho_t) over
/// [0, tau].
struct AveragedNorms {
  double lambda_op = 0.0;
  double lambda_hs = 0.0;
  double lambda_tr = 0.0;
  double tau = 0.0;
  /// Largest of the per-norm quadrature error estimates, already divided by tau.
  double quadrature_error_estimate = 0.0;

  double value(NormKind kind) const noexcept;
};

/// Speed-limit times for one trajectory.
struct QslReport {
  BuresAngle bures;
  double sin2 = 0.0;
  AveragedNorms norms;
  double bound_op = 0.0;
  double bound_hs = 0.0;
  double bound_tr = 0.0;
  /// max(bound_op, bound_hs, bound_tr).
  double tau_qsl = 0.0;
  /// Which norm attains tau_qsl; the operator norm when bounds tie.
  NormKind attained_by = NormKind::kOperator;
  /// Driving time.
  double tau = 0.0;

  double bound(NormKind kind) const noexcept;
};

struct UnitaryBoundReport {
  double averaged_energy = 0.0;
  double sin2 = 0.0;
  double bound = 0.0;
};

/// Default absolute tolerance for averages over [0, tau]: 1e-9 * tau.
double default_tolerance(double tau) noexcept;

/// (1/tau) * integral_0^tau f(t) dt by adaptive Simpson. `tol` bounds the
/// absolute error of the integral. Throws InvalidInput for tau <= 0.
AveragedValue averaged_norm(const std::function<double(double)>& norm_samples,
                            double tau, double tol);

/// All three averaged norms of t -> L_t(rho_t).
AveragedNorms averaged_norms(
    const std::function<ComplexMatrix(double)>& generator_output, double tau,
    double tol);

/// Averaged norms of the exact damped Jaynes-Cummings rate rho-dot_t. The
/// integrand is the closed-form derivative, which has no poles.
AveragedNorms jcm_averaged_norms(const JcmParams& params,
                                 const DensityMatrix& rho0, double tau,
                                 double tol);

/// sin2 / average for a single averaged norm; the common building block of
/// the bounds below.
double bound_from_norm(double sin2, double average);

/// Margolus-Levitin type bound max(1/lambda_op, 1/lambda_tr) * sin2. Zero
/// when sin2 is zero. Throws InconsistentInput when sin2 > 0 but a norm
/// average vanishes, InvalidInput for out-of-range arguments.
double ml_bound_open(double sin2, double lambda_op, double lambda_tr);

/// Mandelstam-Tamm type bound sin2 / lambda_hs, same conventions.
double mt_bound_open(double sin2, double lambda_hs);

/// Unified speed-limit time for the evolution psi0 -> rho_tau driven by the
/// generator whose averaged norms are given.
QslReport qsl_time(const PureState& psi0, const DensityMatrix& rho_tau,
                   const AveragedNorms& norms);

/// Report for the damped Jaynes-Cummings model started in psi0.
QslReport jcm_qsl_time(const JcmParams& params, const PureState& psi0,
                       double tau, double tol);

/// Margolus-Levitin bound for driven closed dynamics:
/// tau >= hbar sin^2 L / (2 E_tau), E_tau = (1/tau) integral <H_t> dt.
/// <H_t> = tr(H_t rho_t) is integrated over the trajectory grid (composite
/// Simpson on uniform grids with an even number of intervals, trapezoid
/// otherwise). Throws PreconditionError when H_t has an eigenvalue below
/// tol::kHamiltonianSpectrum on the grid; shift the zero of energy.
UnitaryBoundReport ml_bound_unitary(
    const std::function<ComplexMatrix(double)>& hamiltonian,
    const Trajectory& trajectory, const PureState& psi0, double hbar = 1.0);

/// (n / tau) (1 - exp(-gamma0 tau)) with n = 2^{1/p}.
double markovian_plateau(double gamma0, double tau, NormKind kind);

}  // namespace qslkit
