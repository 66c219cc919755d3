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

#include <gtest/gtest.h>

#include <cmath>

#include "qsg/exact.hpp"
#include "qsg/partitions.hpp"
#include "qsg/quadrature.hpp"

namespace qsg {
namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<LimitLaw> all_laws() {
  return {LimitLaw::gaussian(), LimitLaw::semicircle(), LimitLaw::star(),
          LimitLaw::q_interp(0.5), LimitLaw::q_interp(1.0),
          LimitLaw::q_interp(2.0)};
}

double integrate_density(const LimitLaw& law, int power) {
  double lo = -10.0, hi = 10.0;
  if (const auto support = law.support()) {
    lo = support->first;
    hi = support->second;
  }
  const auto result = adaptive_simpson(
      [&](double x) { return std::pow(x, power) * law.density(x); }, lo, hi,
      1e-10);
  EXPECT_TRUE(result.converged);
  return result.value;
}

TEST(LimitLaw, SemicircleDensityAtZeroIsOneOverPi) {
  EXPECT_NEAR(LimitLaw::semicircle().density(0.0), 1.0 / kPi, 1e-15);
  EXPECT_EQ(LimitLaw::semicircle().density(2.5), 0.0);
}

TEST(LimitLaw, QDensityAtQZeroIsSemicircle) {
  for (double x = -2.2; x <= 2.2; x += 0.05) {
    const double semicircle =
        std::abs(x) >= 2.0 ? 0.0 : std::sqrt(4.0 - x * x) / (2.0 * kPi);
    EXPECT_NEAR(q_density(x, 0.0), semicircle, 1e-14);
  }
}

TEST(LimitLaw, StarDensityVanishesAtZero) {
  EXPECT_EQ(LimitLaw::star().density(0.0), 0.0);
  EXPECT_GT(LimitLaw::star().density(0.5), 0.0);
}

TEST(LimitLaw, StarCdfDerivativeIsDensity) {
  const auto star = LimitLaw::star();
  for (double x = -2.0; x <= 2.0; x += 0.25) {
    const double h = 1e-6;
    const double derivative = (star.cdf(x + h) - star.cdf(x - h)) / (2.0 * h);
    EXPECT_NEAR(derivative, star.density(x), 1e-7);
  }
}

TEST(LimitLaw, GaussianCdfMatchesTableValue) {
  EXPECT_NEAR(LimitLaw::gaussian().cdf(1.0), 0.8413447460685429, 1e-12);
  EXPECT_NEAR(LimitLaw::gaussian().cdf(1.0), 0.8413, 1e-4);
}

TEST(LimitLaw, CdfLimitsAndSymmetry) {
  for (const auto& law : all_laws()) {
    EXPECT_NEAR(law.cdf(-50.0), 0.0, 1e-12) << law.name();
    EXPECT_NEAR(law.cdf(50.0), 1.0, 1e-12) << law.name();
    EXPECT_NEAR(law.cdf(0.0), 0.5, 1e-9) << law.name();
  }
}

TEST(LimitLaw, DensityIntegratesToOne) {
  for (const auto& law : all_laws()) {
    EXPECT_NEAR(integrate_density(law, 0), 1.0, 1e-8) << law.name();
  }
}

TEST(LimitLaw, SecondMomentIsOne) {
  for (const auto& law : all_laws()) {
    EXPECT_NEAR(integrate_density(law, 2), 1.0, 1e-8) << law.name();
  }
}

TEST(LimitLaw, MomentClosedForms) {
  EXPECT_EQ(LimitLaw::gaussian().moment(6), 15.0);    // (k-1)!!
  EXPECT_EQ(LimitLaw::semicircle().moment(4), 2.0);   // Catalan
  EXPECT_NEAR(LimitLaw::star().moment(4), 5.0 / 3.0, 1e-15);
  for (const auto& law : all_laws()) {
    EXPECT_EQ(law.moment(0), 1.0);
    EXPECT_EQ(law.moment(3), 0.0);
    EXPECT_NEAR(law.moment(2), 1.0, 1e-12) << law.name();
  }
}

TEST(LimitLaw, QMomentsMatchPolynomialForms) {
  for (double lambda : {0.3, 0.7, 1.0, 1.9, 3.2}) {
    const auto law = LimitLaw::q_interp(lambda);
    const double q = law.q();
    EXPECT_NEAR(law.moment(4), 2.0 + q, 1e-10);
    const double m6 = 5.0 + 6.0 * q + 3.0 * q * q + q * q * q;
    EXPECT_NEAR(law.moment(6), m6, 1e-10);
  }
}

TEST(LimitLaw, MomentDensityConsistency) {
  for (const auto& law :
       {LimitLaw::gaussian(), LimitLaw::semicircle(), LimitLaw::star(),
        LimitLaw::q_interp(0.5), LimitLaw::q_interp(1.0),
        LimitLaw::q_interp(2.0)}) {
    for (int k = 0; k <= 8; k += 2) {
      EXPECT_NEAR(integrate_density(law, k), law.moment(k), 1e-6)
          << law.name() << " k=" << k;
    }
  }
}

TEST(LimitLaw, QMomentsDecreaseInLambda) {
  for (int k : {4, 6, 8}) {
    double previous = 1e300;
    for (double lambda = 0.1; lambda <= 4.05; lambda += 0.2) {
      const double m = LimitLaw::q_interp(lambda).moment(k);
      EXPECT_LE(m, previous + 1e-12);
      previous = m;
    }
  }
}

TEST(LimitLaw, ThreeRouteAgreement) {
  for (double lambda : {0.25, 1.0, 4.0}) {
    for (int k = 2; k <= 8; k += 2) {
      const double partition = moment_by_partitions(lambda, k);
      const double touchard =
          touchard_riordan_moment(std::exp(-4.0 * lambda / 3.0), k);
      const double integral = moment_by_integral(lambda, k);
      EXPECT_NEAR(partition, touchard, 1e-9 * std::max(1.0, partition));
      EXPECT_NEAR(partition, integral, 1e-6 * std::max(1.0, partition));
    }
  }
}

TEST(LimitLaw, EndpointLimits) {
  // q -> 1 (lambda -> 0) approaches Gaussian moments; the partition sum is
  // the stable route there. q -> 0 approaches Catalan via Touchard-Riordan.
  for (int k = 2; k <= 12; k += 2) {
    const double gaussian_target = to_double(double_factorial(k - 1));
    const double near_one = q_kappa_sum(k, 0.9999);
    EXPECT_NEAR(near_one / gaussian_target, 1.0, 1e-3) << "k=" << k;

    const double catalan_target = to_double(catalan(k / 2));
    const double near_zero = touchard_riordan_moment(1e-8, k);
    EXPECT_NEAR(near_zero / catalan_target, 1.0, 1e-3) << "k=" << k;
  }
}

TEST(LimitLaw, TouchardRiordanSwitchIsContinuous) {
  // Just below the q = 0.9 switch both routes still agree to high precision;
  // moment() is therefore continuous across the route change.
  const double q = 0.89;
  for (int k = 2; k <= 12; k += 2) {
    EXPECT_NEAR(touchard_riordan_moment(q, k), q_kappa_sum(k, q),
                1e-8 * q_kappa_sum(k, q));
  }
  const double lambda_at_switch = -0.75 * std::log(0.9);
  for (double offset : {-1e-4, 1e-4}) {
    const auto law = LimitLaw::q_interp(lambda_at_switch + offset);
    EXPECT_NEAR(law.moment(8), q_kappa_sum(8, law.q()),
                1e-8 * q_kappa_sum(8, law.q()));
  }
}

TEST(LimitLaw, DensityApproachesSemicircleForLargeLambda) {
  const auto semicircle = LimitLaw::semicircle();
  double previous = 1e300;
  for (double lambda : {2.0, 4.0, 8.0}) {
    const auto law = LimitLaw::q_interp(lambda);
    double max_diff = 0.0;
    for (double x = -1.95; x <= 1.95; x += 0.05) {
      max_diff = std::max(max_diff,
                          std::abs(law.density(x) - semicircle.density(x)));
    }
    EXPECT_LT(max_diff, previous);
    previous = max_diff;
  }
  EXPECT_LT(previous, 5e-3);
}

TEST(LimitLaw, DensityApproachesGaussianForSmallLambda) {
  const auto gaussian = LimitLaw::gaussian();
  double previous = 1e300;
  for (double lambda : {0.25, 0.1, 0.05}) {
    const auto law = LimitLaw::q_interp(lambda);
    double max_diff = 0.0;
    for (double x = -3.0; x <= 3.0; x += 0.05) {
      max_diff =
          std::max(max_diff, std::abs(law.density(x) - gaussian.density(x)));
    }
    EXPECT_LT(max_diff, previous);
    previous = max_diff;
  }
  EXPECT_LT(previous, 2e-2);
}

TEST(LimitLaw, QInterpRejectsNonPositiveLambda) {
  EXPECT_THROW(LimitLaw::q_interp(0.0), std::invalid_argument);
  EXPECT_THROW(LimitLaw::q_interp(-1.0), std::invalid_argument);
  EXPECT_THROW(q_density(0.0, 1.0), std::invalid_argument);
}

TEST(MomentByIntegral, MatchesPartitionValues) {
  EXPECT_EQ(moment_by_integral(1.0, 0), 1.0);
  for (double lambda : {0.25, 1.0, 4.0}) {
    EXPECT_NEAR(moment_by_integral(lambda, 2), 1.0, 1e-8);
  }
  EXPECT_NEAR(moment_by_integral(1.0, 4), 2.0 + std::exp(-4.0 / 3.0), 1e-8);
  EXPECT_THROW(moment_by_integral(0.0, 4), std::invalid_argument);
  EXPECT_THROW(moment_by_integral(1.0, 3), std::invalid_argument);
}

TEST(MomentByPartitions, OddMomentsVanish) {
  EXPECT_EQ(moment_by_partitions(1.0, 3), 0.0);
  EXPECT_EQ(moment_by_partitions(1.0, 7), 0.0);
  EXPECT_EQ(moment_by_partitions(1.0, 0), 1.0);
  EXPECT_THROW(moment_by_partitions(1.0, 18), std::invalid_argument);
}

TEST(LimitLaw, SupportEdges) {
  const auto law = LimitLaw::q_interp(1.0);
  const double r = 2.0 / std::sqrt(1.0 - law.q());
  ASSERT_TRUE(law.support().has_value());
  EXPECT_NEAR(law.support()->second, r, 1e-14);
  EXPECT_EQ(law.density(r + 1e-9), 0.0);
  EXPECT_GT(law.density(r - 1e-3), 0.0);
  EXPECT_FALSE(LimitLaw::star().support().has_value());
}

}  // namespace
}  // namespace qsg
