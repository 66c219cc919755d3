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

#include "qsg/limit_laws.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "qsg/exact.hpp"
#include "qsg/partitions.hpp"
#include "qsg/quadrature.hpp"

namespace qsg {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInvSqrt2Pi = 0.3989422804014326779;
// Beyond this q the alternating Touchard-Riordan sum cancels catastrophically
// in double precision for k >= 10 (relative loss ~ eps 2^k / (1-q)^{k/2}),
// so the exact partition sum takes over.
constexpr double kQSwitch = 0.9;
constexpr int kPartitionMomentMaxK = 16;

double normal_cdf(double x) { return 0.5 * std::erfc(-x * 0.70710678118654752440); }

/// Product over j >= 1 of the q-family density factors at position x.
/// Truncated at the smallest K with q^K < 1e-16; the dropped tail multiplies
/// the result by exp(O(q^K / (1-q))), below double resolution for the q
/// values where the density is evaluated.
double q_product_tail(double x, double q) {
  double product = 1.0;
  double q_pow = q;  // q^j
  double q_2j = q * q;  // q^{2j}
  for (int j = 1; q_pow >= 1e-16; ++j) {
    const double ratio = (1.0 - q_2j * q * q) / (1.0 - q_2j * q);
    const double bracket = 1.0 - x * x * (1.0 - q) * q_pow /
                                     ((1.0 + q_pow) * (1.0 + q_pow));
    product *= ratio * bracket;
    q_pow *= q;
    q_2j *= q * q;
  }
  return product;
}

}  // namespace

double q_density(double x, double q) {
  if (q < 0.0 || q >= 1.0) {
    throw std::invalid_argument("q_density: q must lie in [0,1)");
  }
  const double u = (1.0 - q) * x * x / 4.0;
  if (u >= 1.0) return 0.0;
  // The k = 0 product factor (1+q)(1-u) is folded into the edge term
  // analytically, leaving sqrt(1-u) and no 0/0 at the support edge.
  return std::sqrt(1.0 - q) * (1.0 + q) * std::sqrt(1.0 - u) / kPi *
         q_product_tail(x, q);
}

double touchard_riordan_moment(double q, int k) {
  if (k < 0 || k % 2 != 0) {
    throw std::invalid_argument("touchard_riordan_moment: k must be even");
  }
  if (k == 0) return 1.0;
  double sum = 0.0;
  for (int j = -k / 2; j <= k / 2; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const double term = sign * std::pow(q, 0.5 * j * (j - 1)) *
                        to_double(binomial(k, k / 2 + j));
    sum += term;
  }
  return sum / std::pow(1.0 - q, k / 2);
}

double moment_by_partitions(double lambda, int k) {
  if (k < 0) throw std::invalid_argument("moment_by_partitions: k >= 0");
  if (k % 2 == 1) return 0.0;
  if (k == 0) return 1.0;
  if (k > kPartitionMomentMaxK) {
    throw std::invalid_argument("moment_by_partitions: k must be <= 16");
  }
  return q_kappa_sum(k, std::exp(-4.0 * lambda / 3.0));
}

double moment_by_integral(double lambda, int k) {
  if (lambda <= 0.0) {
    throw std::invalid_argument("moment_by_integral: lambda must be positive");
  }
  if (k < 0 || k % 2 != 0) {
    throw std::invalid_argument("moment_by_integral: k must be even");
  }
  if (k == 0) return 1.0;
  const double c = std::sqrt(lambda / 3.0);
  const double d = lambda / 3.0;
  // Denominator e^{-2 lambda/3} sinh(-2 lambda/3) = (q - 1) / 2.
  const double denom = 0.5 * (std::exp(-4.0 * lambda / 3.0) - 1.0);
  const auto integrand = [&](double x) {
    const std::complex<double> s = std::sinh(std::complex<double>(d, c * x));
    std::complex<double> ratio = 2.0 * s * s / denom;
    std::complex<double> power(1.0, 0.0);
    for (int i = 0; i < k / 2; ++i) power *= ratio;
    return kInvSqrt2Pi * std::exp(-0.5 * x * x) * power;
  };
  const double limit = 12.0 + 0.5 * k;
  // (k-1)!! bounds m_k(lambda), so this keeps the tolerance relative to the
  // actual magnitude of the moment.
  const double tolerance =
      1e-11 * std::max(1.0, to_double(double_factorial(k - 1)));
  const auto real_part = adaptive_simpson(
      [&](double x) { return integrand(x).real(); }, -limit, limit, tolerance);
  const auto imag_part = adaptive_simpson(
      [&](double x) { return integrand(x).imag(); }, -limit, limit, tolerance);
  if (!real_part.converged || !imag_part.converged) {
    throw std::runtime_error("moment_by_integral: quadrature did not converge");
  }
  if (std::abs(imag_part.value) >= 1e-8) {
    throw std::runtime_error(
        "moment_by_integral: imaginary part failed to cancel");
  }
  return real_part.value;
}

LimitLaw::LimitLaw(Kind kind, double lambda) : kind_(kind), lambda_(lambda) {
  if (kind_ == Kind::q_interp) {
    q_ = std::exp(-4.0 * lambda_ / 3.0);
  }
}

LimitLaw LimitLaw::q_interp(double lambda) {
  if (lambda <= 0.0) {
    throw std::invalid_argument("LimitLaw: lambda must be positive");
  }
  return LimitLaw(Kind::q_interp, lambda);
}

double LimitLaw::density(double x) const {
  switch (kind_) {
    case Kind::gaussian:
      return kInvSqrt2Pi * std::exp(-0.5 * x * x);
    case Kind::semicircle:
      return std::abs(x) >= 2.0 ? 0.0 : std::sqrt(4.0 - x * x) / (2.0 * kPi);
    case Kind::q_interp:
      return q_density(x, q_);
    case Kind::star:
      return 3.0 * std::sqrt(3.0 / (2.0 * kPi)) * x * x *
             std::exp(-1.5 * x * x);
  }
  throw std::logic_error("LimitLaw: unknown kind");
}

double LimitLaw::cdf(double x) const {
  switch (kind_) {
    case Kind::gaussian:
      return normal_cdf(x);
    case Kind::semicircle: {
      if (x <= -2.0) return 0.0;
      if (x >= 2.0) return 1.0;
      return 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * kPi) +
             std::asin(0.5 * x) / kPi;
    }
    case Kind::q_interp: {
      const double r = 2.0 / std::sqrt(1.0 - q_);
      if (x <= -r) return 0.0;
      if (x >= r) return 1.0;
      // Substituting t = R sin(theta) removes the edge singularity exactly:
      // the integrand becomes (2 (1+q)/pi) cos^2(theta) * tail(R sin theta).
      const auto integrand = [&](double theta) {
        const double ct = std::cos(theta);
        return 2.0 * (1.0 + q_) / kPi * ct * ct *
               q_product_tail(r * std::sin(theta), q_);
      };
      const auto result =
          adaptive_simpson(integrand, -0.5 * kPi, std::asin(x / r), 1e-10);
      if (!result.converged) {
        throw std::runtime_error("LimitLaw::cdf: quadrature did not converge");
      }
      return std::min(1.0, std::max(0.0, result.value));
    }
    case Kind::star:
      return normal_cdf(x * 1.7320508075688772935) -
             std::sqrt(3.0 / (2.0 * kPi)) * x * std::exp(-1.5 * x * x);
  }
  throw std::logic_error("LimitLaw: unknown kind");
}

double LimitLaw::moment(int k) const {
  if (k < 0) throw std::invalid_argument("LimitLaw::moment: k must be >= 0");
  if (k == 0) return 1.0;
  if (k % 2 == 1) return 0.0;
  switch (kind_) {
    case Kind::gaussian:
      return to_double(double_factorial(k - 1));
    case Kind::semicircle:
      return to_double(catalan(k / 2));
    case Kind::q_interp:
      if (q_ > kQSwitch) return moment_by_partitions(lambda_, k);
      return touchard_riordan_moment(q_, k);
    case Kind::star: {
      // (k+1)! / (6^{k/2} (k/2)!)
      BigInt denom = factorial(k / 2);
      for (int i = 0; i < k / 2; ++i) denom *= 6;
      return to_double(BigRational(factorial(k + 1), denom));
    }
  }
  throw std::logic_error("LimitLaw: unknown kind");
}

std::optional<std::pair<double, double>> LimitLaw::support() const {
  switch (kind_) {
    case Kind::semicircle:
      return std::make_pair(-2.0, 2.0);
    case Kind::q_interp: {
      const double r = 2.0 / std::sqrt(1.0 - q_);
      return std::make_pair(-r, r);
    }
    default:
      return std::nullopt;
  }
}

std::string LimitLaw::name() const {
  switch (kind_) {
    case Kind::gaussian:
      return "gaussian";
    case Kind::semicircle:
      return "semicircle";
    case Kind::q_interp:
      return "q-interp";
    case Kind::star:
      return "star";
  }
  return "unknown";
}

}  // namespace qsg
