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


#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qslkit/errors.hpp"
#include "qslkit/metrics.hpp"
#include "qslkit/qsl.hpp"

using namespace qslkit;
using doctest::Approx;

namespace {

JcmParams jc(double gamma0) {
  JcmParams p;
  p.gamma0 = gamma0;
  return p;
}

// Dense trapezoid average of ||rho'_t|| for an independent route.
double trapezoid_average(const JcmParams& p, NormKind kind, double tau, std::size_t n) {
  const DensityMatrix rho0 = excited_state().projector();
  return oracle::trapezoid(
             [&](double t) {
               return schatten_norm(jcm_state_derivative(p, rho0, t), kind);
             },
             0.0, tau, n) /
         tau;
}

// Rabi phase evolution under H = diag(omega, 0) from (|0> + |1>)/sqrt 2.
DensityMatrix rabi_state(double omega, double t) {
  const Complex phase = std::polar(1.0, -omega * t);
  return DensityMatrix(ComplexMatrix{{0.5, 0.5 * phase}, {0.5 * std::conj(phase), 0.5}});
}

Trajectory rabi_trajectory(double omega, double tau, std::size_t intervals) {
  Trajectory traj;
  traj.times = uniform_grid(0.0, tau, intervals);
  for (double t : traj.times) traj.states.push_back(rabi_state(omega, t));
  return traj;
}

}  // namespace

TEST_CASE("averaged_norm examples") {
  CHECK(averaged_norm([](double) { return 3.0; }, 2.0, 1e-9).value == Approx(3.0));
  for (double g0 : {0.5, 3.0, 40.0}) {
    const double tau = 1.5;
    const AveragedValue avg = averaged_norm(
        [g0](double t) { return g0 * std::exp(-g0 * t); }, tau, 1e-11);
    CHECK(std::abs(avg.value - (1.0 - std::exp(-g0 * tau)) / tau) <= 1e-11);
  }
  CHECK_THROWS_AS(averaged_norm([](double) { return 1.0; }, 0.0, 1e-9), InvalidInput);
  CHECK_THROWS_AS(averaged_norm([](double) { return 1.0; }, 1.0, 0.0), InvalidInput);
}

TEST_CASE("JC averaged norms: ordering and plateau") {
  const DensityMatrix rho0 = excited_state().projector();
  const AveragedNorms n5 = jcm_averaged_norms(jc(5.0), rho0, 1.0, 1e-9);
  CHECK(n5.lambda_op == Approx(1.0 - std::exp(-5.0)).epsilon(0.01));
  CHECK(n5.lambda_tr == Approx(markovian_plateau(5.0, 1.0, NormKind::kTrace)).epsilon(0.01));

  for (double g0 : {1.0, 2.0, 5.0, 10.0, 20.0}) {
    const AveragedNorms n = jcm_averaged_norms(jc(g0), rho0, 1.0, 1e-9);
    for (NormKind kind : kAllNorms) {
      CHECK(n.value(kind) == Approx(markovian_plateau(g0, 1.0, kind)).epsilon(0.01));
    }
  }
  for (double g0 : {0.3, 10.0, 60.0, 400.0}) {
    const AveragedNorms n = jcm_averaged_norms(jc(g0), rho0, 1.0, 1e-9);
    CHECK(n.lambda_op <= n.lambda_hs * (1 + 1e-12));
    CHECK(n.lambda_hs <= n.lambda_tr * (1 + 1e-12));
    CHECK(n.quadrature_error_estimate <= 1e-9);
    // Independent dense trapezoid route.
    CHECK(n.lambda_op == Approx(trapezoid_average(jc(g0), NormKind::kOperator, 1.0, 200000))
                             .epsilon(1e-6));
  }
}

TEST_CASE("quadrature convergence: halving tol stays within the estimate") {
  const DensityMatrix rho0 = excited_state().projector();
  for (double g0 : {5.0, 300.0}) {
    const AveragedNorms a = jcm_averaged_norms(jc(g0), rho0, 1.0, 1e-8);
    const AveragedNorms b = jcm_averaged_norms(jc(g0), rho0, 1.0, 5e-9);
    for (NormKind kind : kAllNorms) {
      CHECK(std::abs(a.value(kind) - b.value(kind)) <=
            a.quadrature_error_estimate + b.quadrature_error_estimate + 1e-15);
    }
  }
}

TEST_CASE("open-system bound examples") {
  CHECK(ml_bound_open(0.0, 0.0, 0.0) == 0.0);
  CHECK(ml_bound_open(0.0, 5.0, 7.0) == 0.0);
  CHECK(ml_bound_open(1.0, 2.0, 4.0) == 0.5);
  CHECK(mt_bound_open(0.0, 0.0) == 0.0);
  CHECK(mt_bound_open(1.0, std::sqrt(2.0)) == Approx(1.0 / std::sqrt(2.0)));
  CHECK(bound_from_norm(0.5, 0.25) == 2.0);

  CHECK_THROWS_AS(ml_bound_open(0.5, 0.0, 0.0), InconsistentInput);
  CHECK_THROWS_AS(mt_bound_open(0.5, 0.0), InconsistentInput);
  CHECK_THROWS_AS(ml_bound_open(1.5, 1.0, 1.0), InvalidInput);
  CHECK_THROWS_AS(ml_bound_open(-0.1, 1.0, 1.0), InvalidInput);
  CHECK_THROWS_AS(mt_bound_open(0.5, -1.0), InvalidInput);
  CHECK_THROWS_AS(bound_from_norm(0.5, NAN), InvalidInput);
}

TEST_CASE("qsl_time examples") {
  const PureState e = excited_state();
  SUBCASE("frozen state") {
    const QslReport r = jcm_qsl_time(jc(0.0), e, 1.0, 1e-9);
    CHECK(r.sin2 == 0.0);
    CHECK(r.tau_qsl == 0.0);
    CHECK(r.bound_op == 0.0);
    CHECK(r.bound_hs == 0.0);
    CHECK(r.bound_tr == 0.0);
  }
  SUBCASE("plateau at gamma0 = 10") {
    const QslReport r = jcm_qsl_time(jc(10.0), e, 1.0, 1e-9);
    CHECK(std::abs(r.tau_qsl - 1.0) <= 1e-6);
    CHECK(r.attained_by == NormKind::kOperator);
    CHECK(r.bound_hs == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-6));
    CHECK(r.bound_tr == Approx(0.5).epsilon(1e-6));
    CHECK(r.tau == 1.0);
    CHECK(r.sin2 == Approx(1.0 - std::norm(jcm_amplitude(jc(10.0), 1.0).value)));
  }
  SUBCASE("non-Markovian gamma0 = 200 is strictly below tau") {
    const QslReport r = jcm_qsl_time(jc(200.0), e, 1.0, 1e-9);
    CHECK(r.tau_qsl < 1.0);
    const double dense = r.sin2 / trapezoid_average(jc(200.0), NormKind::kOperator, 1.0, 400000);
    CHECK(r.tau_qsl == Approx(dense).epsilon(1e-6));
  }
  SUBCASE("qsl_time assembles the maximum literally") {
    AveragedNorms n;
    n.lambda_op = 2.0;
    n.lambda_hs = 1.0;
    n.lambda_tr = 4.0;
    n.tau = 1.0;
    const QslReport r = qsl_time(e, ground_state().projector(), n);
    CHECK(r.tau_qsl == 1.0);
    CHECK(r.attained_by == NormKind::kHilbertSchmidt);
  }
}

TEST_CASE("bound validity, ordering and tightness across a sweep grid") {
  const PureState e = excited_state();
  for (int i = 0; i <= 40; ++i) {
    const double g0 = 0.1 * std::pow(5000.0, i / 40.0);
    for (double tau : {0.5, 1.0, 2.0}) {
      const QslReport r = jcm_qsl_time(jc(g0), e, tau, default_tolerance(tau));
      CHECK(r.bound_op <= tau * (1 + 1e-9));
      CHECK(r.bound_hs <= tau * (1 + 1e-9));
      CHECK(r.bound_tr <= tau * (1 + 1e-9));
      CHECK(r.bound_op >= r.bound_hs);
      CHECK(r.bound_hs >= r.bound_tr);
      CHECK(r.tau_qsl == r.bound_op);
    }
  }
  for (int i = 0; i < 20; ++i) {
    const double g0 = 2.0 * std::pow(10.0, i / 19.0);
    CHECK(std::abs(jcm_qsl_time(jc(g0), e, 1.0, 1e-9).bound_op - 1.0) <= 1e-6);
  }
  CHECK(jcm_qsl_time(jc(500.0), e, 1.0, 1e-9).bound_op <
        jcm_qsl_time(jc(10.0), e, 1.0, 1e-9).bound_op);
}

TEST_CASE("unitary bound: Rabi phase evolution") {
  for (double omega : {0.7, 1.0, 3.0}) {
    const auto h = [omega](double) { return ComplexMatrix::diagonal({omega, 0.0}); };
    const PureState plus = PureState::normalized({1.0, 1.0});

    SUBCASE("orthogonal arrival at pi/omega") {
      const double tau = std::numbers::pi / omega;
      const UnitaryBoundReport r = ml_bound_unitary(h, rabi_trajectory(omega, tau, 200), plus);
      CHECK(std::abs(r.sin2 - 1.0) <= 1e-12);
      CHECK(std::abs(r.averaged_energy - omega / 2) <= 1e-12);
      CHECK(std::abs(r.bound - 1.0 / omega) <= 1e-12);
      CHECK(r.bound <= tau);
    }
    SUBCASE("half way at pi/(2 omega)") {
      const double tau = std::numbers::pi / (2 * omega);
      const UnitaryBoundReport r = ml_bound_unitary(h, rabi_trajectory(omega, tau, 101), plus);
      CHECK(std::abs(r.sin2 - 0.5) <= 1e-12);
      CHECK(std::abs(r.bound - 1.0 / (2 * omega)) <= 1e-12);
      CHECK(r.bound <= tau);
    }
    SUBCASE("propagated trajectory") {
      GeneratorSpec g;
      g.hamiltonian = h;
      const double tau = std::numbers::pi / omega;
      const Trajectory traj = propagate(g, plus.projector(), uniform_grid(0.0, tau, 4000));
      const UnitaryBoundReport r = ml_bound_unitary(h, traj, plus);
      CHECK(r.bound == Approx(1.0 / omega).epsilon(1e-9));
    }
    SUBCASE("hbar scales the bound") {
      const double tau = std::numbers::pi / omega;
      const UnitaryBoundReport r =
          ml_bound_unitary(h, rabi_trajectory(omega, tau, 200), plus, 2.0);
      CHECK(r.bound == Approx(2.0 / omega));
    }
  }

  const PureState plus = PureState::normalized({1.0, 1.0});
  SUBCASE("zero Hamiltonian leaves the state in place") {
    const UnitaryBoundReport r = ml_bound_unitary(
        [](double) { return ComplexMatrix(2); }, rabi_trajectory(0.0, 1.0, 10), plus);
    CHECK(r.bound == 0.0);
    CHECK(r.averaged_energy == 0.0);
  }
  SUBCASE("negative spectrum") {
    CHECK_THROWS_AS(ml_bound_unitary([](double) { return 0.5 * pauli_z(); },
                                     rabi_trajectory(1.0, 1.0, 10), plus),
                    PreconditionError);
  }
  SUBCASE("trajectory too short") {
    CHECK_THROWS_AS(ml_bound_unitary([](double) { return ComplexMatrix(2); },
                                     rabi_trajectory(1.0, 1.0, 0), plus),
                    InvalidInput);
  }
}

TEST_CASE("Markovian plateau") {
  CHECK(markovian_plateau(0.0, 1.0, NormKind::kOperator) == 0.0);
  CHECK(markovian_plateau(5.0, 1.0, NormKind::kTrace) == Approx(1.98652).epsilon(1e-5));
  CHECK(markovian_plateau(5.0, 1.0, NormKind::kTrace) == Approx(2.0 * (1 - std::exp(-5.0))));
  CHECK(markovian_plateau(1e4, 2.0, NormKind::kOperator) == Approx(0.5));
  CHECK(markovian_plateau(3.0, 1.0, NormKind::kHilbertSchmidt) ==
        Approx(std::sqrt(2.0) * (1 - std::exp(-3.0))));
  CHECK(markovian_plateau(1e-12, 1.0, NormKind::kOperator) == Approx(1e-12).epsilon(1e-9));
  CHECK_THROWS_AS(markovian_plateau(-1.0, 1.0, NormKind::kOperator), InvalidInput);
  CHECK_THROWS_AS(markovian_plateau(1.0, 0.0, NormKind::kOperator), InvalidInput);
}
