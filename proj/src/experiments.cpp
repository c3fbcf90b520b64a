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

#include "qslkit/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "qslkit/errors.hpp"
#include "qslkit/metrics.hpp"

namespace qslkit {
namespace {

// Runs task(i) for i in [0, n) on up to `workers` threads. Each index is
// claimed by exactly one worker, so per-index result slots need no locking.
template <typename Task>
void parallel_for(std::size_t n, std::size_t workers, Task task) {
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(1, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) task(i);
    });
  }
}

JcmParams params_for(const SweepConfig& config, double gamma0) {
  JcmParams params;
  params.gamma0 = gamma0;
  params.lambda = config.lambda;
  params.omega0 = config.omega0;
  params.validate();
  return params;
}

SweepRow sweep_point(const SweepConfig& config, double gamma0) {
  SweepRow row;
  row.gamma0 = gamma0;
  const JcmParams params = params_for(config, gamma0);
  row.regime = params.regime();

  const PureState psi0 = excited_state();
  const DensityMatrix rho0 = psi0.projector();
  const DensityMatrix rho_tau = jcm_state(params, rho0, config.tau);
  row.sin2 = sin2_bures(psi0, rho_tau);
  row.fidelity = fidelity(psi0, rho_tau);

  const double tol = config.effective_tol();
  row.tau_qsl = 0.0;
  for (NormKind kind : kAllNorms) {
    if (!config.uses(kind)) continue;
    const double lambda =
        averaged_norm(
            [&](double t) {
              return schatten_norm(jcm_state_derivative(params, rho0, t), kind);
            },
            config.tau, tol)
            .value;
    const double bound = bound_from_norm(row.sin2, lambda);
    row.lambdas[static_cast<std::size_t>(kind)] = lambda;
    row.bounds[static_cast<std::size_t>(kind)] = bound;
    row.tau_qsl = std::max(row.tau_qsl, bound);
  }
  return row;
}

}  // namespace

void SweepConfig::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(lambda)) throw InvalidInput("sweep: lambda must be > 0");
  if (!positive(omega0)) throw InvalidInput("sweep: omega0 must be > 0");
  if (!positive(tau)) throw InvalidInput("sweep: tau must be > 0");
  if (!std::isfinite(tol)) throw InvalidInput("sweep: tolerance must be finite");
  if (norms.empty()) throw InvalidInput("sweep: at least one norm is required");
  if (workers == 0) throw InvalidInput("sweep: workers must be >= 1");
  if (gamma0_values.empty()) {
    if (count == 0) throw InvalidInput("sweep: point count must be >= 1");
    if (!std::isfinite(gamma0_min) || !std::isfinite(gamma0_max) ||
        gamma0_min < 0.0 || gamma0_max < gamma0_min) {
      throw InvalidInput("sweep: need 0 <= gamma0-min <= gamma0-max");
    }
    if (spacing == Spacing::kLog && count > 1 && gamma0_min <= 0.0) {
      throw InvalidInput("sweep: log spacing needs gamma0-min > 0");
    }
  } else {
    for (double g : gamma0_values) {
      if (!std::isfinite(g) || g < 0.0) {
        throw InvalidInput("sweep: gamma0 values must be finite and >= 0");
      }
    }
  }
}

std::vector<double> SweepConfig::expand_gamma0() const {
  validate();
  std::vector<double> values;
  if (!gamma0_values.empty()) {
    values = gamma0_values;
  } else if (count == 1) {
    values.push_back(gamma0_min);
  } else {
    values.resize(count);
    const double steps = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
      const double f = static_cast<double>(i) / steps;
      values[i] = spacing == Spacing::kLinear
                      ? gamma0_min + (gamma0_max - gamma0_min) * f
                      : gamma0_min * std::pow(gamma0_max / gamma0_min, f);
    }
    values.front() = gamma0_min;
    values.back() = gamma0_max;
  }
  std::sort(values.begin(), values.end());
  return values;
}

double SweepConfig::effective_tol() const {
  return tol > 0.0 ? tol : default_tolerance(tau);
}

bool SweepConfig::uses(NormKind kind) const {
  return std::find(norms.begin(), norms.end(), kind) != norms.end();
}

std::vector<SweepRow> sweep_coupling(const SweepConfig& config) {
  const std::vector<double> gammas = config.expand_gamma0();
  std::vector<SweepRow> rows(gammas.size());
  parallel_for(gammas.size(), config.workers, [&](std::size_t i) {
    try {
      rows[i] = sweep_point(config, gammas[i]);
    } catch (const std::exception& e) {
      SweepRow failed;
      failed.gamma0 = gammas[i];
      failed.regime = JcmParams{gammas[i], config.lambda, config.omega0}.regime();
      failed.error = e.what();
      rows[i] = std::move(failed);
    }
  });
  return rows;
}

std::vector<NormRow> norm_vs_coupling(const SweepConfig& config) {
  const std::vector<double> gammas = config.expand_gamma0();
  const double tol = config.effective_tol();
  std::vector<NormRow> rows(gammas.size());
  parallel_for(gammas.size(), config.workers, [&](std::size_t i) {
    NormRow& row = rows[i];
    row.gamma0 = gammas[i];
    try {
      const JcmParams params = params_for(config, gammas[i]);
      const PureState psi0 = excited_state();
      const DensityMatrix rho0 = psi0.projector();
      row.averaged_op_norm =
          averaged_norm(
              [&](double t) {
                return schatten_norm(jcm_state_derivative(params, rho0, t),
                                     NormKind::kOperator);
              },
              config.tau, tol)
              .value;
      row.plateau_prediction =
          markovian_plateau(gammas[i], config.tau, NormKind::kOperator);
      row.fidelity = fidelity(psi0, jcm_state(params, rho0, config.tau));
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });
  return rows;
}

JcmTrajectory trajectory_dump(const JcmParams& params, const DensityMatrix& rho0,
                              double tau, std::size_t samples) {
  params.validate();
  if (samples < 2) throw InvalidInput("trajectory_dump: need at least 2 samples");
  if (!std::isfinite(tau) || tau <= 0.0) {
    throw InvalidInput("trajectory_dump: tau must be finite and > 0");
  }
  JcmTrajectory out;
  Trajectory& traj = out.trajectory;
  traj.times = uniform_grid(0.0, tau, samples - 1);
  const double half_step = 0.5 * tau / static_cast<double>(samples - 1);
  const std::vector<double> poles = jcm_decay_rate_poles(params, tau + half_step);

  for (double t : traj.times) {
    traj.states.push_back(jcm_state(params, rho0, t));
    traj.generator_outputs.push_back(jcm_state_derivative(params, rho0, t));
    const bool near_pole = std::any_of(poles.begin(), poles.end(), [&](double p) {
      return std::abs(p - t) <= half_step;
    });
    std::optional<double> rate;
    if (!near_pole) {
      try {
        rate = jcm_decay_rate(params, t);
      } catch (const PoleError&) {
      }
    }
    out.decay_rate.push_back(rate);
  }
  compute_norms(traj);
  return out;
}

}  // namespace qslkit
