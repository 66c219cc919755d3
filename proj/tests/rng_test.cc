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

#include "qsg/rng.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

namespace qsg {
namespace {

TEST(Philox, DeterministicAndKeySensitive) {
  const auto a = philox4x32({1, 2, 3, 4}, {5, 6});
  EXPECT_EQ(a, philox4x32({1, 2, 3, 4}, {5, 6}));
  EXPECT_NE(a, philox4x32({1, 2, 3, 5}, {5, 6}));
  EXPECT_NE(a, philox4x32({1, 2, 3, 4}, {5, 7}));
}

TEST(Philox, BlocksLookMixed) {
  // Adjacent counters must decorrelate completely.
  std::set<std::uint32_t> words;
  for (std::uint32_t c = 0; c < 256; ++c) {
    const auto block = philox4x32({c, 0, 0, 0}, {42, 0});
    for (auto word : block) words.insert(word);
  }
  EXPECT_EQ(words.size(), 1024u);
}

TEST(CounterRng, UniformRangeAndDeterminism) {
  const CounterRng rng(123, 7);
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const double u = rng.uniform(i);
    EXPECT_GT(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_EQ(u, CounterRng(123, 7).uniform(i));
  }
  EXPECT_NE(rng.uniform(1), CounterRng(123, 8).uniform(1));
  EXPECT_NE(rng.uniform(1), CounterRng(124, 7).uniform(1));
}

TEST(CounterRng, UniformMomentsWithinFiveSigma) {
  const CounterRng rng(2026, 0);
  const int n = 200000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform(i);
    sum += u;
    sum_sq += u * u;
  }
  const double mean = sum / n;
  // Var(U) = 1/12, so the mean estimator has sigma = 1/sqrt(12 n).
  EXPECT_NEAR(mean, 0.5, 5.0 / std::sqrt(12.0 * n));
  EXPECT_NEAR(sum_sq / n, 1.0 / 3.0, 5.0 * 0.3 / std::sqrt(double(n)));
}

TEST(InverseNormalCdf, KnownQuantiles) {
  EXPECT_NEAR(inverse_normal_cdf(0.5), 0.0, 1e-15);
  EXPECT_NEAR(inverse_normal_cdf(0.8413447460685429), 1.0, 1e-9);
  EXPECT_NEAR(inverse_normal_cdf(0.975), 1.959963984540054, 1e-9);
  EXPECT_NEAR(inverse_normal_cdf(0.0013498980316300933), -3.0, 1e-9);
}

TEST(InverseNormalCdf, RoundTripAgainstErfc) {
  for (double u = 1e-12; u < 1.0; u = u * 1.7 + 1e-3) {
    const double x = inverse_normal_cdf(u);
    const double back = 0.5 * std::erfc(-x / std::sqrt(2.0));
    EXPECT_NEAR(back, u, 1e-12 * std::max(1.0, 1.0 / u) * u + 1e-15);
  }
}

TEST(InverseNormalCdf, SymmetryAndDomain) {
  for (double u : {0.01, 0.3, 0.49}) {
    EXPECT_NEAR(inverse_normal_cdf(u), -inverse_normal_cdf(1.0 - u), 1e-11);
  }
  // Deep in the tail the rounding of 1-u itself moves the quantile by
  // ~eps/phi(x), so only a loose symmetry bound is meaningful.
  EXPECT_NEAR(inverse_normal_cdf(1e-10), -inverse_normal_cdf(1.0 - 1e-10),
              1e-6);
  EXPECT_THROW(inverse_normal_cdf(0.0), std::domain_error);
  EXPECT_THROW(inverse_normal_cdf(1.0), std::domain_error);
  EXPECT_THROW(inverse_normal_cdf(-0.5), std::domain_error);
}

TEST(CounterRng, NormalMomentsWithinFiveSigma) {
  const CounterRng rng(99, 3);
  const int n = 200000;
  double sum = 0.0, sum_sq = 0.0, sum_cu = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal(i);
    sum += z;
    sum_sq += z * z;
    sum_cu += z * z * z;
  }
  const double root_n = std::sqrt(double(n));
  EXPECT_NEAR(sum / n, 0.0, 5.0 / root_n);
  EXPECT_NEAR(sum_sq / n, 1.0, 5.0 * std::sqrt(2.0) / root_n);
  EXPECT_NEAR(sum_cu / n, 0.0, 5.0 * std::sqrt(15.0) / root_n);
}

}  // namespace
}  // namespace qsg
