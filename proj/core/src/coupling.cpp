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

#include "qsg/coupling.hpp"

#include <cmath>
#include <stdexcept>

namespace qsg {

namespace {

BigInt pow_int(int base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Central moments of Exp(1) about its mean are the derangement numbers,
// D_m = m D_{m-1} + (-1)^m.
BigInt derangement(int m) {
  BigInt d = 1;
  for (int i = 1; i <= m; ++i) {
    d = d * i + (i % 2 == 0 ? 1 : -1);
  }
  return d;
}

}  // namespace

BigRational CouplingDistribution::moment(int m) const {
  if (m < 0 || m > kMaxMoment) {
    throw std::invalid_argument("CouplingDistribution: moment order out of range");
  }
  if (m == 0) return 1;
  switch (kind_) {
    case CouplingKind::standard_normal:
      if (m % 2 == 1) return 0;
      return BigRational(double_factorial(m - 1));
    case CouplingKind::rademacher:
      return m % 2 == 1 ? BigRational(0) : BigRational(1);
    case CouplingKind::uniform_sym:
      // E X^m = 3^{m/2} / (m+1) for even m on [-sqrt(3), sqrt(3)].
      if (m % 2 == 1) return 0;
      return BigRational(pow_int(3, m / 2), m + 1);
    case CouplingKind::shifted_exponential:
      return BigRational(derangement(m));
  }
  throw std::logic_error("CouplingDistribution: unknown kind");
}

double CouplingDistribution::moment_d(int m) const { return to_double(moment(m)); }

double CouplingDistribution::sample(const CounterRng& rng,
                                    std::uint64_t index) const {
  const double u = rng.uniform(index);
  switch (kind_) {
    case CouplingKind::standard_normal:
      return inverse_normal_cdf(u);
    case CouplingKind::rademacher:
      return u < 0.5 ? -1.0 : 1.0;
    case CouplingKind::uniform_sym:
      return 1.7320508075688772935 * (2.0 * u - 1.0);
    case CouplingKind::shifted_exponential:
      return -std::log1p(-u) - 1.0;
  }
  throw std::logic_error("CouplingDistribution: unknown kind");
}

CouplingDistribution CouplingDistribution::parse(std::string_view name) {
  if (name == "gauss") return CouplingDistribution(CouplingKind::standard_normal);
  if (name == "rademacher") return CouplingDistribution(CouplingKind::rademacher);
  if (name == "uniform") return CouplingDistribution(CouplingKind::uniform_sym);
  if (name == "exp-shift") {
    return CouplingDistribution(CouplingKind::shifted_exponential);
  }
  throw std::invalid_argument("CouplingDistribution: unknown kind \"" +
                              std::string(name) + "\"");
}

std::string CouplingDistribution::name() const {
  switch (kind_) {
    case CouplingKind::standard_normal:
      return "gauss";
    case CouplingKind::rademacher:
      return "rademacher";
    case CouplingKind::uniform_sym:
      return "uniform";
    case CouplingKind::shifted_exponential:
      return "exp-shift";
  }
  return "unknown";
}

}  // namespace qsg
