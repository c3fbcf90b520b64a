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
#include <optional>
#include <string>
#include <vector>

#include "qslkit/dynamics.hpp"
#include "qslkit/qsl.hpp"

namespace qslkit {

enum class Spacing { kLinear, kLog };

/// Coupling-strength sweep of the damped Jaynes-Cummings model, qubit
/// starting in the excited state.
struct SweepConfig {
  double lambda = 50.0;
  double omega0 = 1.0;
  double tau = 1.0;
  /// Explicit coupling values; when empty the range below is expanded.
  std::vector<double> gamma0_values;
  double gamma0_min = 0.1;
  double gamma0_max = 500.0;
  std::size_t count = 60;
  Spacing spacing = Spacing::kLog;
  std::vector<NormKind> norms{NormKind::kOperator, NormKind::kHilbertSchmidt,
                              NormKind::kTrace};
  /// Absolute quadrature tolerance; <= 0 selects default_tolerance(tau).
  double tol = 0.0;
  std::size_t workers = 1;

  /// Throws InvalidInput for an unusable configuration.
  void validate() const;
  /// Coupling values in ascending order.
  std::vector<double> expand_gamma0() const;
  double effective_tol() const;
  bool uses(NormKind kind) const;
};

struct SweepRow {
  double gamma0 = 0.0;
  Regime regime = Regime::kMarkovian;
  /// Indexed by NormKind; empty for norms not requested.
  std::array<std::optional<double>, 3> lambdas;
  std::array<std::optional<double>, 3> bounds;
  double sin2 = 0.0;
  double tau_qsl = 0.0;
  double fidelity = 1.0;
  /// Set when this point failed; the numeric fields are then meaningless.
  std::optional<std::string> error;

  std::optional<double> lambda(NormKind kind) const {
    return lambdas[static_cast<std::size_t>(kind)];
  }
  std::optional<double> bound(NormKind kind) const {
    return bounds[static_cast<std::size_t>(kind)];
  }
};

/// One row per coupling value, ascending, independent of worker count.
std::vector<SweepRow> sweep_coupling(const SweepConfig& config);

struct NormRow {
  double gamma0 = 0.0;
  double averaged_op_norm = 0.0;
  double plateau_prediction = 0.0;
  double fidelity = 1.0;
  std::optional<std::string> error;
};

/// Exact averaged operator norm next to the Markovian plateau prediction.
std::vector<NormRow> norm_vs_coupling(const SweepConfig& config);

/// Sampled exact dynamics with the decay rate alongside.
struct JcmTrajectory {
  /// generator_outputs hold rho-dot_t from the closed form.
  Trajectory trajectory;
  /// gamma_t per sample; empty where the sample sits on a pole, i.e. a pole
  /// lies within half a grid step of it.
  std::vector<std::optional<double>> decay_rate;
};

/// Uniform grid of `samples` points on [0, tau]; samples >= 2.
JcmTrajectory trajectory_dump(const JcmParams& params, const DensityMatrix& rho0,
                              double tau, std::size_t samples);

}  // namespace qslkit
