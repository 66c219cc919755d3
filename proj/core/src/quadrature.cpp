// Copyright 2026 The qsg authors
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

#include "qsg/quadrature.hpp"

#include <cmath>
#include <limits>

namespace qsg {

namespace {

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

// Returns the refined panel value and accumulates the Richardson estimate of
// the remaining error, so convergence is judged on the global budget rather
// than per leaf (integrable edge singularities stall individual leaves while
// their contribution to the total error keeps shrinking).
double recurse(const std::function<double(double)>& f, double a, double b,
               double fa, double fm, double fb, double whole, double tolerance,
               int depth, int forced, double& error_estimate) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  // `forced` splits guard against peaked integrands whose bulk the first
  // coarse samples miss entirely; the epsilon floor stops subdivision once
  // delta is rounding noise, where further splits cannot help.
  const double noise_floor = 64.0 * std::numeric_limits<double>::epsilon() *
                             (std::abs(left) + std::abs(right));
  if ((forced <= 0 && std::abs(delta) <= 15.0 * tolerance) || depth <= 0 ||
      std::abs(delta) <= noise_floor) {
    error_estimate += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  return recurse(f, a, m, fa, flm, fm, left, 0.5 * tolerance, depth - 1,
                 forced - 1, error_estimate) +
         recurse(f, m, b, fm, frm, fb, right, 0.5 * tolerance, depth - 1,
                 forced - 1, error_estimate);
}

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f,
                                  double a, double b, double tolerance,
                                  int max_depth) {
  if (a == b) return {0.0, true};
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = simpson(fa, fm, fb, b - a);
  double error_estimate = 0.0;
  const double value = recurse(f, a, b, fa, fm, fb, whole, tolerance,
                               max_depth, 8, error_estimate);
  return {value, error_estimate <= 2.0 * tolerance};
}

}  // namespace qsg
