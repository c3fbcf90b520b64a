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

#include "qslkit/dynamics.hpp"

namespace qslkit {

/// Angle in [0, pi/2] between a pure state and a (mixed) state.
struct BuresAngle {
  double radians = 0.0;
};

/// <psi0| rho |psi0>, clamped to [0, 1]. Excursions beyond
/// tol::kOverlapClamp, or an imaginary part beyond tol::kHermiticity, throw
/// InvalidInput, as does a dimension mismatch.
double overlap(const PureState& psi0, const DensityMatrix& rho);

/// arccos(sqrt(<psi0|rho|psi0>)).
BuresAngle bures_angle(const PureState& psi0, const DensityMatrix& rho_tau);

/// cos of the Bures angle, i.e. sqrt(<psi0|rho|psi0>).
double fidelity(const PureState& psi0, const DensityMatrix& rho_tau);

/// sin^2 of the Bures angle, evaluated as 1 - <psi0|rho|psi0>.
double sin2_bures(const PureState& psi0, const DensityMatrix& rho_tau);

}  // namespace qslkit
