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

#include <string>
#include <string_view>

#include "qsg/exact.hpp"
#include "qsg/rng.hpp"

namespace qsg {

enum class CouplingKind {
  standard_normal,
  rademacher,
  uniform_sym,          // uniform on [-sqrt(3), sqrt(3)]
  shifted_exponential,  // Exp(1) - 1; skewed witness with E X^3 = 2
};

/// A zero-mean, unit-variance coupling law with exact raw moments and a
/// deterministic inverse-CDF sampler on the counter stream.
class CouplingDistribution {
 public:
  static constexpr int kMaxMoment = 12;

  explicit CouplingDistribution(CouplingKind kind) : kind_(kind) {}

  CouplingKind kind() const { return kind_; }

  /// Exact m-th raw moment for 0 <= m <= 12.
  BigRational moment(int m) const;
  double moment_d(int m) const;

  double sample(const CounterRng& rng, std::uint64_t index) const;

  /// Accepts "gauss", "rademacher", "uniform", "exp-shift".
  static CouplingDistribution parse(std::string_view name);
  std::string name() const;

 private:
  CouplingKind kind_;
};

}  // namespace qsg
