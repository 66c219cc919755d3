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

#include "qsg/coupling.hpp"
#include "qsg/exact.hpp"
#include "qsg/hypergraph.hpp"

namespace qsg {

/// A real number a + b*sqrt(3) with exact rational coefficients. Hyperedges
/// of odd size carry 3^{-|e|/2} weights, so oracle sums live in Q[sqrt(3)].
struct ExactReal {
  BigRational unit = 0;
  BigRational sqrt3 = 0;

  ExactReal& operator+=(const ExactReal& other) {
    unit += other.unit;
    sqrt3 += other.sqrt3;
    return *this;
  }
  bool is_zero() const { return unit == 0 && sqrt3 == 0; }
  double to_double() const;
};

/// Exact expected moment E 2^{-n} Tr H^k split over the three index classes:
///   D — some index repeated other than exactly twice,
///   A — all indices exactly twice, edges of distinct indices pairwise
///       disjoint (every trace in this class is 1),
///   B — all indices exactly twice, some two distinct indices sharing a
///       vertex.
/// Sums are stored unnormalised (divide by edge_count^{k/2}); the doubles
/// carry the normalised values. Tuple counts cover the enumerated patterns,
/// i.e. tuples whose index multiplicities are all >= 2 (singletons vanish
/// under the zero-mean expectation and are skipped).
struct MomentBreakdown {
  int k = 0;
  int edge_count = 0;

  double total = 0.0;
  double part_D = 0.0;
  double part_A = 0.0;
  double part_B = 0.0;

  ExactReal sum_D;
  ExactReal sum_A;
  ExactReal sum_B;

  BigInt count_D = 0;
  BigInt count_A = 0;
  BigInt count_B = 0;

  /// Exact normalised total when it is representable as a rational:
  /// even k with a vanishing sqrt(3) component, or an exactly zero sum.
  std::optional<BigRational> exact_total() const;
};

struct OracleOptions {
  /// Upper bound on the number of grouped pattern evaluations; exceeding it
  /// is a hard error carrying the estimate, never a silent truncation.
  double budget = 1e8;
  int threads = 0;  // 0 = auto, capped by QSG_THREADS
};

/// Brute-force evaluation of the k-th expected moment by enumeration over
/// multisets of distinct (letters, edge) indices with multiplicity patterns.
MomentBreakdown expected_moment(const Hypergraph& graph,
                                const CouplingDistribution& dist, int k,
                                const OracleOptions& options = {});

/// |part_B| of the k-th moment. The all-twice patterns carry expectation 1
/// for every unit-variance coupling, so this is distribution independent.
double bnk_fraction(const Hypergraph& graph, int k,
                    const OracleOptions& options = {});

}  // namespace qsg
