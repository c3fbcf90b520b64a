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

#include <array>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "qslkit/linalg.hpp"

namespace qslkit {

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and positivity; throws InvalidInput.
  explicit DensityMatrix(ComplexMatrix matrix);

  /// Wraps a matrix without validation. For states produced by trusted
  /// numerical routines that perform their own checks.
  static DensityMatrix unchecked(ComplexMatrix matrix);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return matrix_(row, col);
  }
  double purity() const;

 private:
  struct Trusted {};
  DensityMatrix(ComplexMatrix matrix, Trusted) : matrix_(std::move(matrix)) {}

  ComplexMatrix matrix_;
};

/// Unit-norm state vector.
class PureState {
 public:
  /// Throws InvalidInput unless sum |a_i|^2 = 1 within tol::kUnitNorm.
  explicit PureState(std::vector<Complex> amplitudes);
  /// Rescales to unit norm; throws InvalidInput for the zero vector.
  static PureState normalized(std::vector<Complex> amplitudes);

  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }
  /// |psi><psi|.
  DensityMatrix projector() const;

 private:
  std::vector<Complex> amplitudes_;
};

// Qubit basis order is (|1> = excited, |0> = ground): index 0 holds the
// excited level, so rho(0, 0) is the excited population rho_11.
inline constexpr std::size_t kExcited = 0;
inline constexpr std::size_t kGround = 1;

PureState excited_state();
PureState ground_state();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
/// sigma_- = (sigma_x - i sigma_y) / 2 in the (excited, ground) basis: maps
/// the excited level to the ground level.
ComplexMatrix sigma_minus();
/// sigma_+ = (sigma_x + i sigma_y) / 2.
ComplexMatrix sigma_plus();

enum class Regime { kMarkovian, kBoundary, kNonMarkovian };

std::string_view to_string(Regime regime) noexcept;

/// Resonant damped Jaynes-Cummings model with a Lorentzian bath at zero
/// temperature, one-excitation sector.
struct JcmParams {
  double gamma0 = 0.0;  // coupling strength
  double lambda = 50.0;  // spectral width
  double omega0 = 1.0;  // qubit frequency
  double hbar = 1.0;

  /// Throws InvalidInput unless gamma0 >= 0, lambda > 0, omega0 > 0, hbar > 0.
  void validate() const;
  /// Principal square root of lambda^2 - 2 gamma0 lambda; exactly 0 on the
  /// regime boundary.
  Complex d() const;
  Regime regime() const;
  double bath_correlation_time() const { return 1.0 / lambda; }
  double system_decay_time() const { return 1.0 / gamma0; }
};

/// Coefficient G(t) of the excited amplitude and its time derivative.
/// rho_11(t) = rho_11(0) |G|^2 and rho_10(t) = rho_10(0) G.
struct Amplitude {
  Complex value;
  Complex derivative;
};

/// G(t) = e^{-lambda t/2} [cosh(dt/2) + (lambda/d) sinh(dt/2)] and its
/// derivative. Both are entire in t; there are no poles to avoid.
Amplitude jcm_amplitude(const JcmParams& params, double t);

/// gamma_t = 2 gamma0 lambda sinh(dt/2) / (d cosh(dt/2) + lambda sinh(dt/2)).
/// Throws PoleError when the denominator vanishes. Negative and unbounded
/// values occur in the non-Markovian regime.
double jcm_decay_rate(const JcmParams& params, double t);

/// Poles of gamma_t in [0, t_max], ascending. They coincide with the zeros
/// of G(t) and exist only in the non-Markovian regime.
std::vector<double> jcm_decay_rate_poles(const JcmParams& params, double t_max);

/// Lorentzian J(omega) = (1/2pi) gamma0 lambda / ((omega0 - omega)^2 + lambda^2).
double jcm_spectral_density(const JcmParams& params, double omega);

/// Closed-form reduced state at time t, in the interaction picture.
DensityMatrix jcm_state(const JcmParams& params, const DensityMatrix& rho0,
                        double t);

/// Analytic time derivative of jcm_state. Finite for every t.
ComplexMatrix jcm_state_derivative(const JcmParams& params,
                                   const DensityMatrix& rho0, double t);

/// gamma_t (sigma_- rho sigma_+ - {sigma_+ sigma_-, rho} / 2).
ComplexMatrix jcm_generator_apply(const JcmParams& params,
                                  const DensityMatrix& rho, double t);

/// Jump operator with a time-dependent rate.
struct JumpTerm {
  ComplexMatrix op;
  std::function<double(double)> rate;
};

/// L_t(rho) = -(i/hbar)[H_t, rho]
///            + sum_k rate_k(t) (L_k rho L_k^dagger - {L_k^dagger L_k, rho}/2).
struct GeneratorSpec {
  std::function<ComplexMatrix(double)> hamiltonian;  // may be empty
  std::vector<JumpTerm> jump_terms;
  double hbar = 1.0;

  ComplexMatrix apply(double t, const ComplexMatrix& rho) const;
};

/// Generator of the damped Jaynes-Cummings model as a GeneratorSpec.
GeneratorSpec jcm_generator(const JcmParams& params);

/// States, generator outputs and their Schatten norms on a time grid.
struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  std::vector<ComplexMatrix> generator_outputs;
  /// Indexed by NormKind.
  std::array<std::vector<double>, 3> norms;

  std::size_t size() const noexcept { return times.size(); }
  const std::vector<double>& norm(NormKind kind) const {
    return norms[static_cast<std::size_t>(kind)];
  }
  std::vector<double>& norm(NormKind kind) {
    return norms[static_cast<std::size_t>(kind)];
  }
};

/// Fills generator_outputs' norms for every stored output.
void compute_norms(Trajectory& trajectory);

/// Fixed-step classical Runge-Kutta integration of rho' = L_t(rho), one step
/// per grid interval. Throws AccuracyError when |tr rho_t - tr rho_0|
/// exceeds tol::kTraceDrift and PoleError when a rate evaluation hits a pole.
Trajectory propagate(const GeneratorSpec& generator, const DensityMatrix& rho0,
                     std::span<const double> times);

/// n + 1 equally spaced points on [t0, t1].
std::vector<double> uniform_grid(double t0, double t1, std::size_t intervals);

}  // namespace qslkit
