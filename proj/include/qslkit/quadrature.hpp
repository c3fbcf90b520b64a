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
#include <functional>

#include "qslkit/tolerances.hpp"

namespace qslkit {

struct QuadratureResult {
  double value = 0.0;
  /// Sum of the local Richardson error estimates |S2 - S1| / 15.
  double error_estimate = 0.0;
  std::size_t intervals = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-9;
  std::size_t max_intervals = tol::kMaxQuadratureIntervals;
  /// Uniform panels the range is cut into before adapting. Keeps a smooth
  /// but oscillatory integrand from converging on an aliased first estimate.
  std::size_t initial_panels = 64;
};

/// Adaptive Simpson quadrature with interval bisection. The tolerance is
/// shared among subintervals in proportion to their length. Throws
/// AccuracyError, carrying the worst unresolved interval, when more than
/// max_intervals would be needed; InvalidInput for a non-finite integrand.
QuadratureResult integrate_adaptive_simpson(
    const std::function<double(double)>& f, double lower, double upper,
    const QuadratureOptions& options = {});

}  // namespace qslkit
