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

#include <cstddef>

/// Every numerical threshold used by the library lives here.
namespace qslkit::tol {

/// Elementwise |M - M^dagger| allowed for a matrix to count as Hermitian.
inline constexpr double kHermiticity = 1e-12;
/// Relative reconstruction error of the Hermitian eigensolver.
inline constexpr double kEigenReconstruction = 1e-10;
/// |tr rho - 1| allowed for a density matrix.
inline constexpr double kUnitTrace = 1e-12;
/// Smallest eigenvalue accepted for a density matrix.
inline constexpr double kPositivity = -1e-10;
/// | ||psi||^2 - 1 | allowed for a pure state.
inline constexpr double kUnitNorm = 1e-12;
/// |Im gamma_t| above which the decay rate is reported as inconsistent.
inline constexpr double kRateImaginary = 1e-12;
/// |denominator| of the decay rate treated as an exact pole.
inline constexpr double kPoleDenominator = 1e-300;
/// |lambda^2 - 2 gamma0 lambda| / lambda^2 below which d is treated as 0.
inline constexpr double kBoundaryRegime = 1e-12;
/// Trace drift tolerated by the Runge-Kutta watchdog.
inline constexpr double kTraceDrift = 1e-8;
/// Overlap excursion outside [0, 1] that is clamped silently.
inline constexpr double kOverlapClamp = 1e-9;
/// Most negative Hamiltonian eigenvalue accepted by the unitary bound.
inline constexpr double kHamiltonianSpectrum = -1e-10;
/// Default absolute quadrature tolerance, relative to the driving time.
inline constexpr double kQuadratureRelative = 1e-9;
/// Maximum number of accepted subintervals in adaptive quadrature.
inline constexpr std::size_t kMaxQuadratureIntervals = std::size_t{1} << 20;

}  // namespace qslkit::tol
