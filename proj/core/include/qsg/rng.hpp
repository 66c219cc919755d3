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

#include <array>
#include <cstdint>

namespace qsg {

/// Philox-4x32 block cipher with 10 rounds. Stateless: every output block is
/// a pure function of (key, counter), so draws keyed by structural indices
/// are bit-reproducible independent of evaluation order and thread count.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Standard normal quantile function, accurate to full double precision
/// (rational initial guess refined by Newton steps on erfc). p in (0,1).
double inverse_normal_cdf(double p);

/// One independent uniform/normal stream per (seed, stream) pair, indexed by
/// a 64-bit counter.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : seed_(seed), stream_(stream) {}

  /// Uniform double in the open interval (0,1), 53 significant bits.
  double uniform(std::uint64_t index) const;

  /// Standard normal via the inverse-CDF transform; no rejection loops, so
  /// the counter-to-variate map stays one-to-one.
  double normal(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
};

}  // namespace qsg
