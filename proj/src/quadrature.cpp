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

#include "qslkit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "qslkit/errors.hpp"

namespace qslkit {
namespace {

struct Segment {
  double a, b;
  double fa, fm, fb;
  double whole;  // Simpson estimate on [a, b]
  double tol;
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

}  // namespace

QuadratureResult integrate_adaptive_simpson(
    const std::function<double(double)>& f, double lower, double upper,
    const QuadratureOptions& options) {
  if (!std::isfinite(lower) || !std::isfinite(upper) || upper < lower) {
    throw InvalidInput("integrate_adaptive_simpson: invalid interval");
  }
  if (!(options.abs_tol > 0.0)) {
    throw InvalidInput("integrate_adaptive_simpson: tolerance must be > 0");
  }
  QuadratureResult result;
  if (upper == lower) return result;

  auto eval = [&](double t) {
    const double v = f(t);
    if (!std::isfinite(v)) {
      throw InvalidInput("integrate_adaptive_simpson: non-finite integrand at t = " +
                         std::to_string(t));
    }
    return v;
  };

  const double width = upper - lower;
  // Below this width an interval is accepted whatever its local estimate;
  // the estimate is still added to the reported error.
  const double min_width = 64.0 * std::numeric_limits<double>::epsilon() *
                           std::max({std::abs(lower), std::abs(upper), width});

  const std::size_t panels = std::max<std::size_t>(1, options.initial_panels);
  std::vector<Segment> stack;
  stack.reserve(panels + 128);
  {
    std::vector<double> nodes(2 * panels + 1);
    for (std::size_t i = 0; i <= 2 * panels; ++i) {
      nodes[i] = lower + width * (static_cast<double>(i) / (2.0 * panels));
    }
    nodes.back() = upper;
    std::vector<double> values(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) values[i] = eval(nodes[i]);
    // Reverse push so that panels are processed left to right.
    for (std::size_t p = panels; p-- > 0;) {
      const std::size_t i = 2 * p;
      Segment s{nodes[i], nodes[i + 2], values[i], values[i + 1], values[i + 2],
                0.0, options.abs_tol * (nodes[i + 2] - nodes[i]) / width};
      s.whole = simpson(s.a, s.b, s.fa, s.fm, s.fb);
      stack.push_back(s);
    }
  }

  double worst_delta = -1.0;
  double worst_a = lower;
  double worst_b = upper;
  while (!stack.empty()) {
    const Segment s = stack.back();
    stack.pop_back();
    const double m = 0.5 * (s.a + s.b);
    const double f_left = eval(0.5 * (s.a + m));
    const double f_right = eval(0.5 * (m + s.b));
    const double left = simpson(s.a, m, s.fa, f_left, s.fm);
    const double right = simpson(m, s.b, s.fm, f_right, s.fb);
    const double delta = left + right - s.whole;

    if (std::abs(delta) <= 15.0 * s.tol || (s.b - s.a) <= min_width) {
      result.value += left + right + delta / 15.0;
      result.error_estimate += std::abs(delta) / 15.0;
      ++result.intervals;
      continue;
    }
    if (std::abs(delta) > worst_delta) {
      worst_delta = std::abs(delta);
      worst_a = s.a;
      worst_b = s.b;
    }
    if (result.intervals + stack.size() + 2 > options.max_intervals) {
      throw AccuracyError(
          "integrate_adaptive_simpson: no convergence within " +
              std::to_string(options.max_intervals) + " intervals",
          worst_a, worst_b);
    }
    stack.push_back({m, s.b, s.fm, f_right, s.fb, right, 0.5 * s.tol});
    stack.push_back({s.a, m, s.fa, f_left, s.fm, left, 0.5 * s.tol});
  }
  return result;
}

}  // namespace qslkit
