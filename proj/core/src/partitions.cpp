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

#include "qsg/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsg {

namespace {

void check_even_positive(int k, const char* where) {
  if (k < 2 || k % 2 != 0) {
    throw std::invalid_argument(std::string(where) +
                                ": k must be a positive even integer");
  }
}

constexpr int kMaxK = 32;

}  // namespace

PairPartition::PairPartition(std::vector<std::uint8_t> block_of)
    : block_of_(std::move(block_of)) {
  const int k = static_cast<int>(block_of_.size());
  check_even_positive(k, "PairPartition");
  std::vector<int> seen(k / 2, 0);
  int next_label = 0;
  for (std::uint8_t label : block_of_) {
    if (label >= k / 2) {
      throw std::invalid_argument("PairPartition: block label out of range");
    }
    if (label == next_label) {
      ++next_label;  // labels must appear in order of first appearance
    } else if (label > next_label) {
      throw std::invalid_argument("PairPartition: labels not canonical");
    }
    ++seen[label];
  }
  for (int c : seen) {
    if (c != 2) {
      throw std::invalid_argument("PairPartition: every block needs size 2");
    }
  }
}

int PairPartition::crossing_number() const {
  const int b = blocks();
  std::vector<std::pair<int, int>> span(b, {-1, -1});
  for (int pos = 0; pos < k(); ++pos) {
    auto& [first, second] = span[block_of_[pos]];
    (first < 0 ? first : second) = pos;
  }
  int crossings = 0;
  for (int r = 0; r < b; ++r) {
    for (int s = r + 1; s < b; ++s) {
      const auto [a, c] = span[r];
      const auto [bb, d] = span[s];
      if ((a < bb && bb < c && c < d) || (bb < a && a < d && d < c)) {
        ++crossings;
      }
    }
  }
  return crossings;
}

void for_each_pair_partition(
    int k, const std::function<void(const PairPartition&)>& fn) {
  check_even_positive(k, "for_each_pair_partition");
  if (k > kMaxK) {
    throw std::invalid_argument("for_each_pair_partition: k too large");
  }
  std::vector<std::uint8_t> block(k, 0xFF);
  auto recurse = [&](auto&& self, int next_label) -> void {
    int first = 0;
    while (first < k && block[first] != 0xFF) ++first;
    if (first == k) {
      fn(PairPartition(block));
      return;
    }
    block[first] = static_cast<std::uint8_t>(next_label);
    for (int partner = first + 1; partner < k; ++partner) {
      if (block[partner] != 0xFF) continue;
      block[partner] = static_cast<std::uint8_t>(next_label);
      self(self, next_label + 1);
      block[partner] = 0xFF;
    }
    block[first] = 0xFF;
  };
  recurse(recurse, 0);
}

std::uint64_t pair_partition_count(int k) {
  check_even_positive(k, "pair_partition_count");
  return double_factorial(k - 1).convert_to<std::uint64_t>();
}

std::uint64_t count_noncrossing(int k) {
  check_even_positive(k, "count_noncrossing");
  return catalan(k / 2).convert_to<std::uint64_t>();
}

std::vector<std::uint64_t> crossing_histogram(int k) {
  check_even_positive(k, "crossing_histogram");
  const int b = k / 2;
  std::vector<std::uint64_t> histogram(b * (b - 1) / 2 + 1, 0);
  for_each_pair_partition(
      k, [&](const PairPartition& p) { ++histogram[p.crossing_number()]; });
  while (histogram.size() > 1 && histogram.back() == 0) histogram.pop_back();
  return histogram;
}

TraceValue pattern_trace(const PairPartition& p, std::span<const int> letters) {
  if (static_cast<int>(letters.size()) != p.blocks()) {
    throw std::invalid_argument("pattern_trace: need k/2 letters");
  }
  std::vector<int> word(p.k());
  for (int pos = 0; pos < p.k(); ++pos) {
    word[pos] = letters[p.block_of(pos)];
  }
  return chain_trace(word);
}

std::int64_t pattern_trace_sum(const PairPartition& p) {
  const int b = p.blocks();
  std::vector<int> letters(b, 1);
  std::int64_t sum = 0;
  bool more = true;
  while (more) {
    const TraceValue t = pattern_trace(p, letters);
    if (!t.is_zero) {
      // Every letter appears twice, so traces are real.
      if (t.phase & 1u) {
        throw std::logic_error("pattern_trace_sum: unexpected imaginary trace");
      }
      sum += t.phase == 0 ? 1 : -1;
    }
    int pos = b - 1;
    while (pos >= 0 && letters[pos] == 3) {
      letters[pos] = 1;
      --pos;
    }
    if (pos < 0) {
      more = false;
    } else {
      ++letters[pos];
    }
  }
  return sum;
}

BigRational star_f(int k) {
  check_even_positive(k, "star_f");
  // Every letter sum is relabelling-invariant, so the labelled-partition sum
  // is (k/2)! times the unlabelled one.
  BigInt unlabelled_sum = 0;
  for_each_pair_partition(k, [&](const PairPartition& p) {
    unlabelled_sum += pattern_trace_sum(p);
  });
  return BigRational(unlabelled_sum * factorial(k / 2));
}

double q_kappa_sum(int k, double q) {
  const auto histogram = crossing_histogram(k);
  double sum = 0.0;
  double q_power = 1.0;
  for (std::size_t kappa = 0; kappa < histogram.size(); ++kappa) {
    sum += static_cast<double>(histogram[kappa]) * q_power;
    q_power *= q;
  }
  return sum;
}

}  // namespace qsg
