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

#include "qslkit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qslkit/errors.hpp"
#include "qslkit/tolerances.hpp"

namespace qslkit {

double overlap(const PureState& psi0, const DensityMatrix& rho) {
  const std::size_t n = psi0.dim();
  if (rho.dim() != n) {
    throw InvalidInput("overlap: state dimension " + std::to_string(n) +
                       " does not match density matrix dimension " +
                       std::to_string(rho.dim()));
  }
  const auto psi = psi0.amplitudes();
  Complex value{};
  for (std::size_t i = 0; i < n; ++i) {
    Complex row{};
    for (std::size_t j = 0; j < n; ++j) row += rho(i, j) * psi[j];
    value += std::conj(psi[i]) * row;
  }
  if (std::abs(value.imag()) > tol::kHermiticity) {
    throw InvalidInput("overlap: <psi|rho|psi> has imaginary part " +
                       std::to_string(value.imag()));
  }
  const double real = value.real();
  if (real < -tol::kOverlapClamp || real > 1.0 + tol::kOverlapClamp) {
    throw InvalidInput("overlap: <psi|rho|psi> = " + std::to_string(real) +
                       " lies outside [0, 1]");
  }
  return std::clamp(real, 0.0, 1.0);
}

BuresAngle bures_angle(const PureState& psi0, const DensityMatrix& rho_tau) {
  return {std::acos(std::sqrt(overlap(psi0, rho_tau)))};
}

double fidelity(const PureState& psi0, const DensityMatrix& rho_tau) {
  return std::sqrt(overlap(psi0, rho_tau));
}

double sin2_bures(const PureState& psi0, const DensityMatrix& rho_tau) {
  return 1.0 - overlap(psi0, rho_tau);
}

}  // namespace qslkit
