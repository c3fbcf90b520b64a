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

#include "qslkit/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qslkit/errors.hpp"
#include "qslkit/tolerances.hpp"

namespace qslkit {
namespace {

constexpr Complex kI{0.0, 1.0};

void require_time(double t, const char* op) {
  if (!std::isfinite(t) || t < 0.0) {
    throw InvalidInput(std::string(op) + ": time must be finite and >= 0, got " +
                       std::to_string(t));
  }
}

void require_qubit(const DensityMatrix& rho, const char* op) {
  if (rho.dim() != 2) {
    throw InvalidInput(std::string(op) + ": expected a 2x2 density matrix, got " +
                       std::to_string(rho.dim()) + "x" + std::to_string(rho.dim()));
  }
}

// sinh(x) / x, analytic at the origin.
Complex sinhc(Complex x) {
  if (std::abs(x) < 1e-3) {
    const Complex x2 = x * x;
    return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sinh(x) / x;
}

// Above this Re(dt/2) the hyperbolic functions are rescaled by e^{-x}.
constexpr double kLargeArgument = 20.0;

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_finite()) {
    throw InvalidInput("DensityMatrix: non-finite entry");
  }
  if (matrix_.dim() == 0) {
    throw InvalidInput("DensityMatrix: empty matrix");
  }
  if (!matrix_.is_hermitian(tol::kHermiticity)) {
    throw InvalidInput("DensityMatrix: matrix is not Hermitian");
  }
  const Complex tr = trace(matrix_);
  if (std::abs(tr - 1.0) > tol::kUnitTrace) {
    throw InvalidInput("DensityMatrix: trace is " + std::to_string(tr.real()) +
                       ", expected 1");
  }
  const std::vector<double> eig = hermitian_eigenvalues(matrix_);
  if (eig.back() < tol::kPositivity) {
    throw InvalidInput("DensityMatrix: negative eigenvalue " +
                       std::to_string(eig.back()));
  }
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix matrix) {
  return DensityMatrix(std::move(matrix), Trusted{});
}

double DensityMatrix::purity() const { return trace(matrix_ * matrix_).real(); }

PureState::PureState(std::vector<Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  double norm2 = 0.0;
  for (const Complex& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw InvalidInput("PureState: non-finite amplitude");
    }
    norm2 += std::norm(a);
  }
  if (amplitudes_.empty() || std::abs(norm2 - 1.0) > tol::kUnitNorm) {
    throw InvalidInput("PureState: amplitudes must have unit norm, got " +
                       std::to_string(norm2));
  }
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
  double norm2 = 0.0;
  for (const Complex& a : amplitudes) norm2 += std::norm(a);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw InvalidInput("PureState::normalized: zero or non-finite vector");
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (Complex& a : amplitudes) a *= inv;
  return PureState(std::move(amplitudes));
}

DensityMatrix PureState::projector() const {
  const std::size_t n = amplitudes_.size();
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) m(i, i) = m(i, i).real();
  return DensityMatrix::unchecked(std::move(m));
}

PureState excited_state() { return PureState({1.0, 0.0}); }
PureState ground_state() { return PureState({0.0, 1.0}); }

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix pauli_y() { return {{0.0, -kI}, {kI, 0.0}}; }
ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

ComplexMatrix sigma_minus() { return 0.5 * (pauli_x() - kI * pauli_y()); }
ComplexMatrix sigma_plus() { return 0.5 * (pauli_x() + kI * pauli_y()); }

std::string_view to_string(Regime regime) noexcept {
  switch (regime) {
    case Regime::kMarkovian:
      return "Markovian";
    case Regime::kBoundary:
      return "Boundary";
    case Regime::kNonMarkovian:
      return "NonMarkovian";
  }
  return "?";
}

void JcmParams::validate() const {
  if (!std::isfinite(gamma0) || gamma0 < 0.0) {
    throw InvalidInput("JcmParams: gamma0 must be finite and >= 0");
  }
  if (!std::isfinite(lambda) || lambda <= 0.0) {
    throw InvalidInput("JcmParams: lambda must be finite and > 0");
  }
  if (!std::isfinite(omega0) || omega0 <= 0.0) {
    throw InvalidInput("JcmParams: omega0 must be finite and > 0");
  }
  if (!std::isfinite(hbar) || hbar <= 0.0) {
    throw InvalidInput("JcmParams: hbar must be finite and > 0");
  }
}

Complex JcmParams::d() const {
  const double disc = lambda * lambda - 2.0 * gamma0 * lambda;
  if (std::abs(disc) < tol::kBoundaryRegime * lambda * lambda) return 0.0;
  return std::sqrt(Complex{disc, 0.0});
}

Regime JcmParams::regime() const {
  const double disc = lambda * lambda - 2.0 * gamma0 * lambda;
  if (std::abs(disc) < tol::kBoundaryRegime * lambda * lambda) {
    return Regime::kBoundary;
  }
  return disc > 0.0 ? Regime::kMarkovian : Regime::kNonMarkovian;
}

// With x = dt/2 and sinh(x)/d = (t/2) sinhc(x):
//   G     = e^{-lambda t/2} [cosh x + (lambda t/2) sinhc x]
//   G-dot = -gamma0 lambda (t/2) e^{-lambda t/2} sinhc x
// The second line is e^{-lambda t/2}[-(lambda/2) h + h'] after using
// d^2 - lambda^2 = -2 gamma0 lambda, which removes the cancellation.
Amplitude jcm_amplitude(const JcmParams& params, double t) {
  params.validate();
  require_time(t, "jcm_amplitude");
  const Complex d = params.d();
  const Complex x = 0.5 * d * t;
  const double half_lt = 0.5 * params.lambda * t;
  const double coupling = params.gamma0 * params.lambda;

  if (x.real() > kLargeArgument) {
    const Complex decay = std::exp(x - half_lt);
    const Complex e2 = std::exp(-2.0 * x);
    const Complex sinh_over_d = (1.0 - e2) / (2.0 * d);  // times e^{x}
    return {decay * (0.5 * (1.0 + e2) + params.lambda * sinh_over_d),
            -coupling * decay * sinh_over_d};
  }
  const double envelope = std::exp(-half_lt);
  const Complex s = sinhc(x);
  return {envelope * (std::cosh(x) + half_lt * s),
          -coupling * 0.5 * t * envelope * s};
}

double jcm_decay_rate(const JcmParams& params, double t) {
  params.validate();
  require_time(t, "jcm_decay_rate");
  const Complex d = params.d();
  const Complex x = 0.5 * d * t;
  const double half_lt = 0.5 * params.lambda * t;
  const double coupling_t = params.gamma0 * params.lambda * t;

  // gamma_t = gamma0 lambda t sinhc(x) / (cosh x + (lambda t/2) sinhc x),
  // the d -> 0 limit being gamma0 lambda t / (1 + lambda t / 2).
  Complex numerator;
  Complex denominator;
  if (x.real() > 1.0) {
    const Complex tanhc = std::tanh(x) / x;
    numerator = coupling_t * tanhc;
    denominator = 1.0 + half_lt * tanhc;
  } else {
    const Complex s = sinhc(x);
    numerator = coupling_t * s;
    denominator = std::cosh(x) + half_lt * s;
  }
  if (std::abs(denominator) < tol::kPoleDenominator) throw PoleError(t);
  const Complex rate = numerator / denominator;
  if (std::abs(rate.imag()) > tol::kRateImaginary * std::max(1.0, std::abs(rate))) {
    throw InconsistentInput("jcm_decay_rate: complex decay rate at t = " +
                            std::to_string(t));
  }
  return rate.real();
}

std::vector<double> jcm_decay_rate_poles(const JcmParams& params, double t_max) {
  params.validate();
  std::vector<double> poles;
  if (params.regime() != Regime::kNonMarkovian) return poles;
  // Denominator is proportional to cos(y) + (lambda/|d|) sin(y), y = |d|t/2.
  const double w = std::abs(params.d());
  const double first = std::numbers::pi - std::atan(w / params.lambda);
  for (int k = 0;; ++k) {
    const double t = 2.0 * (first + k * std::numbers::pi) / w;
    if (t > t_max) break;
    poles.push_back(t);
  }
  return poles;
}

double jcm_spectral_density(const JcmParams& params, double omega) {
  const double detuning = params.omega0 - omega;
  return params.gamma0 * params.lambda /
         (2.0 * std::numbers::pi *
          (detuning * detuning + params.lambda * params.lambda));
}

DensityMatrix jcm_state(const JcmParams& params, const DensityMatrix& rho0,
                        double t) {
  require_qubit(rho0, "jcm_state");
  const Amplitude g = jcm_amplitude(params, t);
  const double excited = rho0(kExcited, kExcited).real() * std::norm(g.value);
  const Complex coherence = rho0(kExcited, kGround) * g.value;
  ComplexMatrix m(2);
  m(kExcited, kExcited) = excited;
  m(kGround, kGround) = 1.0 - excited;
  m(kExcited, kGround) = coherence;
  m(kGround, kExcited) = std::conj(coherence);
  return DensityMatrix(std::move(m));
}

ComplexMatrix jcm_state_derivative(const JcmParams& params,
                                   const DensityMatrix& rho0, double t) {
  require_qubit(rho0, "jcm_state_derivative");
  const Amplitude g = jcm_amplitude(params, t);
  const double excited_rate = rho0(kExcited, kExcited).real() * 2.0 *
                              (g.derivative * std::conj(g.value)).real();
  const Complex coherence_rate = rho0(kExcited, kGround) * g.derivative;
  ComplexMatrix m(2);
  m(kExcited, kExcited) = excited_rate;
  m(kGround, kGround) = -excited_rate;
  m(kExcited, kGround) = coherence_rate;
  m(kGround, kExcited) = std::conj(coherence_rate);
  return m;
}

ComplexMatrix jcm_generator_apply(const JcmParams& params,
                                  const DensityMatrix& rho, double t) {
  require_qubit(rho, "jcm_generator_apply");
  const double rate = jcm_decay_rate(params, t);
  const ComplexMatrix lower = sigma_minus();
  const ComplexMatrix raise = sigma_plus();
  const ComplexMatrix& r = rho.matrix();
  ComplexMatrix out = lower * r * raise - 0.5 * anticommutator(raise * lower, r);
  out *= rate;
  return out;
}

ComplexMatrix GeneratorSpec::apply(double t, const ComplexMatrix& rho) const {
  ComplexMatrix out(rho.dim());
  if (hamiltonian) {
    out += (-kI / hbar) * commutator(hamiltonian(t), rho);
  }
  for (const JumpTerm& term : jump_terms) {
    const double rate = term.rate(t);
    if (rate == 0.0) continue;
    const ComplexMatrix op_dag = adjoint(term.op);
    ComplexMatrix dissipator =
        term.op * rho * op_dag - 0.5 * anticommutator(op_dag * term.op, rho);
    out += rate * dissipator;
  }
  return out;
}

GeneratorSpec jcm_generator(const JcmParams& params) {
  params.validate();
  GeneratorSpec spec;
  spec.hbar = params.hbar;
  spec.jump_terms.push_back(
      {sigma_minus(), [params](double t) { return jcm_decay_rate(params, t); }});
  return spec;
}

void compute_norms(Trajectory& trajectory) {
  for (NormKind kind : kAllNorms) trajectory.norm(kind).clear();
  for (const ComplexMatrix& out : trajectory.generator_outputs) {
    const SingularSpectrum spectrum = singular_values(out);
    for (NormKind kind : kAllNorms) {
      trajectory.norm(kind).push_back(schatten_norm(spectrum, kind));
    }
  }
}

Trajectory propagate(const GeneratorSpec& generator, const DensityMatrix& rho0,
                     std::span<const double> times) {
  if (times.empty()) throw InvalidInput("propagate: empty time grid");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i])) throw InvalidInput("propagate: non-finite time");
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw InvalidInput("propagate: times must be strictly increasing");
    }
  }

  Trajectory out;
  out.times.assign(times.begin(), times.end());
  out.states.reserve(times.size());
  out.generator_outputs.reserve(times.size());

  const Complex initial_trace = trace(rho0.matrix());
  ComplexMatrix rho = rho0.matrix();
  out.states.push_back(rho0);
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double t = times[i - 1];
    const double h = times[i] - t;
    const ComplexMatrix k1 = generator.apply(t, rho);
    const ComplexMatrix k2 = generator.apply(t + 0.5 * h, rho + (0.5 * h) * k1);
    const ComplexMatrix k3 = generator.apply(t + 0.5 * h, rho + (0.5 * h) * k2);
    const ComplexMatrix k4 = generator.apply(t + h, rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!rho.is_finite() ||
        std::abs(trace(rho) - initial_trace) > tol::kTraceDrift) {
      throw AccuracyError("propagate: trace drift exceeds tolerance", t,
                          times[i]);
    }
    out.states.push_back(DensityMatrix::unchecked(rho));
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    out.generator_outputs.push_back(
        generator.apply(times[i], out.states[i].matrix()));
  }
  compute_norms(out);
  return out;
}

std::vector<double> uniform_grid(double t0, double t1, std::size_t intervals) {
  if (intervals == 0) throw InvalidInput("uniform_grid: need at least one interval");
  std::vector<double> grid(intervals + 1);
  const double span = t1 - t0;
  for (std::size_t i = 0; i <= intervals; ++i) {
    grid[i] = t0 + span * (static_cast<double>(i) / static_cast<double>(intervals));
  }
  grid.back() = t1;
  return grid;
}

}  // namespace qslkit
