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

#pragma once

#include <optional>
#include <string>
#include <utility>

namespace qsg {

/// One of the four limiting densities of states: standard normal, Wigner
/// semicircle, the q-interpolating family with q = exp(-4 lambda / 3), and
/// the star law 3 sqrt(3/(2 pi)) x^2 exp(-3 x^2 / 2). All have unit second
/// moment and vanishing odd moments.
class LimitLaw {
 public:
  enum class Kind { gaussian, semicircle, q_interp, star };

  static LimitLaw gaussian() { return LimitLaw(Kind::gaussian, 0.0); }
  static LimitLaw semicircle() { return LimitLaw(Kind::semicircle, 0.0); }
  static LimitLaw star() { return LimitLaw(Kind::star, 0.0); }
  static LimitLaw q_interp(double lambda);

  Kind kind() const { return kind_; }
  double lambda() const { return lambda_; }
  double q() const { return q_; }

  double density(double x) const;
  double cdf(double x) const;

  /// Exact moment: closed forms for gaussian/semicircle/star, the
  /// Touchard-Riordan sum for the q family (switching to the partition sum
  /// when q > 0.9, where the alternating sum cancels catastrophically).
  double moment(int k) const;

  /// Support interval for the compact laws, nullopt for the full line.
  std::optional<std::pair<double, double>> support() const;

  std::string name() const;

 private:
  LimitLaw(Kind kind, double lambda);

  Kind kind_;
  double lambda_ = 0.0;
  double q_ = 0.0;
};

/// The density v(x|q) of the q family (semicircle at q = 0); exposed so the
/// algebraic q -> 0 limit can be checked directly.
double q_density(double x, double q);

/// Even moment of the q family via the alternating Touchard-Riordan sum
/// (1-q)^{-k/2} sum_j (-1)^j q^{j(j-1)/2} C(k, k/2+j).
double touchard_riordan_moment(double q, int k);

/// Even moment as the exact sum over unlabelled pair partitions of
/// q^{crossing_number}; odd k gives 0. Requires k <= 16.
double moment_by_partitions(double lambda, int k);

/// Even moment via numerical quadrature of the Gaussian integral
/// representation. The integrand is complex valued; the imaginary part is
/// integrated as well and must come out below 1e-8, else this throws.
double moment_by_integral(double lambda, int k);

}  // namespace qsg
