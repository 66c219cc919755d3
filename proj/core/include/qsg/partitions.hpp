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

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qsg/exact.hpp"
#include "qsg/pauli.hpp"

namespace qsg {

/// A pairing of {1..k} into k/2 two-element blocks, stored in canonical
/// unlabelled form: position i carries the 0-based block label, and labels
/// appear in order of first appearance. Labelled counts are recovered by the
/// (k/2)! relabelling factor.
class PairPartition {
 public:
  explicit PairPartition(std::vector<std::uint8_t> block_of);

  int k() const { return static_cast<int>(block_of_.size()); }
  int blocks() const { return k() / 2; }
  int block_of(int position) const { return block_of_[position]; }
  const std::vector<std::uint8_t>& labels() const { return block_of_; }

  /// Number of block pairs {r,s} interleaving as a < b < c < d with
  /// pi(a)=pi(c)=r, pi(b)=pi(d)=s. Pairwise test, O(k^2).
  int crossing_number() const;
  bool is_noncrossing() const { return crossing_number() == 0; }

  bool operator==(const PairPartition&) const = default;

 private:
  std::vector<std::uint8_t> block_of_;
};

/// Visits all (k-1)!! canonical pair partitions of {1..k}. Enumeration order
/// is deterministic; the walk is replayable and side-effect free.
void for_each_pair_partition(int k,
                             const std::function<void(const PairPartition&)>& fn);

/// (k-1)!! as a plain integer; throws on odd k.
std::uint64_t pair_partition_count(int k);

/// Catalan(k/2) = k! / ((k/2)! (k/2+1)!), the number of non-crossing pair
/// partitions.
std::uint64_t count_noncrossing(int k);

/// Counts of pair partitions of {1..k} by crossing number; index kappa.
std::vector<std::uint64_t> crossing_histogram(int k);

/// (1/2) Tr sigma^{(a_{pi(1)})} ... sigma^{(a_{pi(k)})} for a letter vector
/// of length k/2 with entries in {1,2,3}.
TraceValue pattern_trace(const PairPartition& p, std::span<const int> letters);

/// Sum of pattern_trace over all 3^{k/2} letter vectors. Exact: every letter
/// appears twice in the pattern word, so each trace is 0 or +-1.
std::int64_t pattern_trace_sum(const PairPartition& p);

/// Brute-force star-graph sum over letters and *labelled* partitions,
/// f(k) = sum_a sum_{pi in S_k} (1/2) Tr sigma^{(a_{pi(1)})}...sigma^{(a_{pi(k)})}.
BigRational star_f(int k);

/// Sum over unlabelled pair partitions of q^{crossing_number}; Catalan at
/// q = 0 and (k-1)!! at q = 1.
double q_kappa_sum(int k, double q);

}  // namespace qsg
