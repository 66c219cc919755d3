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

#include "qsg/moment_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "qsg/pauli.hpp"
#include "qsg/threads.hpp"

namespace qsg {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;

// One element of I_n: a letter tuple on a hyperedge, flattened to masks.
struct OracleIndex {
  std::uint64_t x_mask;
  std::uint64_t z_mask;
  std::uint8_t phase;
  std::uint64_t vertex_mask;
  std::int32_t edge_size;
};

struct ClassAccumulator {
  BigRational re_unit = 0, re_sqrt3 = 0;
  BigRational im_unit = 0, im_sqrt3 = 0;
  BigInt count = 0;

  void merge(const ClassAccumulator& other) {
    re_unit += other.re_unit;
    re_sqrt3 += other.re_sqrt3;
    im_unit += other.im_unit;
    im_sqrt3 += other.im_sqrt3;
    count += other.count;
  }
};

enum TupleClass { kClassD = 0, kClassA = 1, kClassB = 2 };

struct Accumulators {
  ClassAccumulator cls[3];

  void merge(const Accumulators& other) {
    for (int i = 0; i < 3; ++i) cls[i].merge(other.cls[i]);
  }
};

std::vector<OracleIndex> build_index_set(const Hypergraph& graph) {
  if (graph.n_vertices() > 64) {
    throw std::invalid_argument("expected_moment: more than 64 vertices");
  }
  std::vector<OracleIndex> indices;
  for (const auto& edge : graph.edges()) {
    std::uint64_t vertex_mask = 0;
    for (int v : edge) vertex_mask |= std::uint64_t{1} << (v - 1);
    std::vector<int> digits(edge.size(), 1);
    bool more = true;
    while (more) {
      std::uint64_t x = 0, z = 0;
      unsigned phase = 0;
      for (std::size_t i = 0; i < edge.size(); ++i) {
        const std::uint64_t bit = std::uint64_t{1} << (edge[i] - 1);
        if (digits[i] != 3) x |= bit;  // X or Y
        if (digits[i] != 1) z |= bit;  // Y or Z
        if (digits[i] == 2) ++phase;
      }
      indices.push_back({x, z, static_cast<std::uint8_t>(phase & 3u),
                         vertex_mask, static_cast<std::int32_t>(edge.size())});
      int pos = static_cast<int>(edge.size()) - 1;
      while (pos >= 0 && digits[pos] == 3) {
        digits[pos] = 1;
        --pos;
      }
      if (pos < 0) {
        more = false;
      } else {
        ++digits[pos];
      }
    }
  }
  return indices;
}

// Partitions of k into parts >= 2, descending.
std::vector<std::vector<int>> multiplicity_patterns(int k) {
  std::vector<std::vector<int>> patterns;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      patterns.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 2; --part) {
      if (remaining - part == 1) continue;  // would leave a singleton
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  recurse(recurse, k, k);
  return patterns;
}

BigInt word_arrangements(int k, const std::vector<int>& parts) {
  BigInt result = factorial(k);
  for (int part : parts) result /= factorial(part);
  return result;
}

BigInt distinct_assignments(const std::vector<int>& parts) {
  // Multiset permutations of the parts vector.
  BigInt result = factorial(static_cast<int>(parts.size()));
  int run = 1;
  for (std::size_t i = 1; i <= parts.size(); ++i) {
    if (i < parts.size() && parts[i] == parts[i - 1]) {
      ++run;
    } else {
      result /= factorial(run);
      run = 1;
    }
  }
  return result;
}

double combination_count(std::size_t n, int m) {
  double result = 1.0;
  for (int i = 0; i < m; ++i) {
    result *= static_cast<double>(n - i) / (i + 1);
  }
  return result;
}

// Normalised trace of the product of the word's Pauli strings: 0 or i^t.
inline int word_trace_phase(const std::vector<const OracleIndex*>& word) {
  std::uint64_t x = 0, z = 0;
  unsigned phase = 0;
  for (const OracleIndex* idx : word) {
    phase += idx->phase + 2u * static_cast<unsigned>(std::popcount(z & idx->x_mask));
    x ^= idx->x_mask;
    z ^= idx->z_mask;
  }
  if (x != 0 || z != 0) return -1;
  return static_cast<int>(phase & 3u);
}

struct PatternJob {
  std::vector<int> parts;                     // descending
  std::vector<std::vector<int>> assignments;  // distinct permutations
  BigRational moment_product;
  bool all_twice;
};

}  // namespace

double ExactReal::to_double() const {
  return qsg::to_double(unit) + qsg::to_double(sqrt3) * kSqrt3;
}

std::optional<BigRational> MomentBreakdown::exact_total() const {
  ExactReal sum = sum_D;
  sum += sum_A;
  sum += sum_B;
  if (sum.is_zero()) return BigRational(0);
  if (k % 2 != 0 || sum.sqrt3 != 0) return std::nullopt;
  BigInt norm = 1;
  for (int i = 0; i < k / 2; ++i) norm *= edge_count;
  return sum.unit / BigRational(norm);
}

MomentBreakdown expected_moment(const Hypergraph& graph,
                                const CouplingDistribution& dist, int k,
                                const OracleOptions& options) {
  if (k < 0) throw std::invalid_argument("expected_moment: k must be >= 0");
  MomentBreakdown result;
  result.k = k;
  result.edge_count = graph.edge_count();
  if (k == 0) {
    // Empty product: trace of the identity; vacuously in class A.
    result.sum_A.unit = 1;
    result.count_A = 1;
    result.total = result.part_A = 1.0;
    return result;
  }

  const auto indices = build_index_set(graph);
  const auto patterns = multiplicity_patterns(k);

  // Hard budget guard on the number of grouped pattern evaluations.
  double estimate = 0.0;
  for (const auto& parts : patterns) {
    const int m = static_cast<int>(parts.size());
    if (m > static_cast<int>(indices.size())) continue;
    estimate += combination_count(indices.size(), m) *
                to_double(distinct_assignments(parts)) *
                to_double(word_arrangements(k, parts));
  }
  if (estimate > options.budget) {
    std::ostringstream msg;
    msg << "expected_moment: enumeration estimate " << estimate
        << " exceeds budget " << options.budget << " (k = " << k
        << ", |I| = " << indices.size() << ")";
    throw std::runtime_error(msg.str());
  }

  // Group tuples by (set of distinct indices, multiplicity assignment); the
  // expectation factor and weight are constant within a group, and the trace
  // is tallied exactly over the word permutations.
  std::vector<PatternJob> jobs;
  for (const auto& parts : patterns) {
    if (static_cast<int>(parts.size()) > static_cast<int>(indices.size())) {
      continue;
    }
    PatternJob job;
    job.parts = parts;
    job.all_twice = std::all_of(parts.begin(), parts.end(),
                                [](int p) { return p == 2; });
    job.moment_product = 1;
    for (int part : parts) job.moment_product *= dist.moment(part);
    std::vector<int> assignment = parts;
    std::sort(assignment.begin(), assignment.end());
    do {
      job.assignments.push_back(assignment);
    } while (std::next_permutation(assignment.begin(), assignment.end()));
    jobs.push_back(std::move(job));
  }

  // |D ∩ {all multiplicities >= 2}| is pattern-combinatorial: no enumeration
  // or edge classification is needed, every non-all-twice pattern lands in D.
  for (const auto& job : jobs) {
    if (job.all_twice) continue;
    const int m = static_cast<int>(job.parts.size());
    BigInt combos = 1;
    for (int i = 0; i < m; ++i) {
      combos *= static_cast<std::uint64_t>(indices.size() - i);
    }
    combos /= factorial(m);
    result.count_D += combos * static_cast<int>(job.assignments.size()) *
                      word_arrangements(k, job.parts);
  }

  const int n_threads = std::min<int>(resolve_thread_count(options.threads),
                                      static_cast<int>(indices.size()));
  std::vector<Accumulators> partials(std::max(1, n_threads));

  auto worker = [&](int thread_id) {
    Accumulators& acc = partials[thread_id];
    std::vector<int> chosen;
    std::vector<const OracleIndex*> word;
    word.reserve(k);
    for (const auto& job : jobs) {
      const int m = static_cast<int>(job.parts.size());
      if (job.moment_product == 0 && !job.all_twice) continue;
      const BigInt arrangements = word_arrangements(k, job.parts);

      auto process_combination = [&](const std::vector<int>& combo) {
        // Classify: with every index twice, the tuple is in A when the edges
        // of distinct indices are pairwise disjoint (all its traces are then
        // 1), else in B; other patterns are in D.
        TupleClass tuple_class = kClassD;
        if (job.all_twice) {
          tuple_class = kClassA;
          for (int i = 0; i < m && tuple_class == kClassA; ++i) {
            for (int j = i + 1; j < m; ++j) {
              if (indices[combo[i]].vertex_mask &
                  indices[combo[j]].vertex_mask) {
                tuple_class = kClassB;
                break;
              }
            }
          }
        }
        ClassAccumulator& cls = acc.cls[tuple_class];
        if (job.all_twice) cls.count += arrangements;

        for (const auto& assignment : job.assignments) {
          word.clear();
          int weight_exp = 0;  // sum of r_i * |e_i|
          for (int i = 0; i < m; ++i) {
            for (int r = 0; r < assignment[i]; ++r) {
              word.push_back(&indices[combo[i]]);
            }
            weight_exp += assignment[i] * indices[combo[i]].edge_size;
          }
          std::int64_t tally[4] = {0, 0, 0, 0};
          do {
            const int phase = word_trace_phase(word);
            if (phase >= 0) ++tally[phase];
          } while (std::next_permutation(word.begin(), word.end()));
          const std::int64_t g_re = tally[0] - tally[2];
          const std::int64_t g_im = tally[1] - tally[3];
          if (g_re == 0 && g_im == 0) continue;
          BigInt three_pow = 1;
          for (int i = 0; i < (weight_exp + 1) / 2; ++i) three_pow *= 3;
          if (weight_exp % 2 == 0) {
            const BigRational w = job.moment_product / BigRational(three_pow);
            cls.re_unit += w * g_re;
            cls.im_unit += w * g_im;
          } else {
            // 3^{-M/2} = sqrt(3) / 3^{(M+1)/2}
            const BigRational w = job.moment_product / BigRational(three_pow);
            cls.re_sqrt3 += w * g_re;
            cls.im_sqrt3 += w * g_im;
          }
        }
      };

      // Combinations of m distinct indices, striped over the first element.
      chosen.assign(m, 0);
      auto recurse = [&](auto&& self, int depth, int first) -> void {
        if (depth == m) {
          process_combination(chosen);
          return;
        }
        const int limit = static_cast<int>(indices.size()) - (m - depth - 1);
        for (int v = first; v < limit; ++v) {
          if (depth == 0 && (v % n_threads) != thread_id) continue;
          chosen[depth] = v;
          self(self, depth + 1, v + 1);
        }
      };
      recurse(recurse, 0, 0);
    }
  };

  if (n_threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  Accumulators combined;
  for (const auto& partial : partials) combined.merge(partial);

  for (int c = 0; c < 3; ++c) {
    const auto& cls = combined.cls[c];
    if (cls.im_unit != 0 || cls.im_sqrt3 != 0) {
      throw std::logic_error(
          "expected_moment: imaginary trace contributions failed to cancel");
    }
  }

  result.sum_D = {combined.cls[kClassD].re_unit, combined.cls[kClassD].re_sqrt3};
  result.sum_A = {combined.cls[kClassA].re_unit, combined.cls[kClassA].re_sqrt3};
  result.sum_B = {combined.cls[kClassB].re_unit, combined.cls[kClassB].re_sqrt3};
  result.count_A = combined.cls[kClassA].count;
  result.count_B = combined.cls[kClassB].count;

  const double norm = std::pow(static_cast<double>(graph.edge_count()), 0.5 * k);
  result.part_D = result.sum_D.to_double() / norm;
  result.part_A = result.sum_A.to_double() / norm;
  result.part_B = result.sum_B.to_double() / norm;
  result.total = result.part_D + result.part_A + result.part_B;
  return result;
}

double bnk_fraction(const Hypergraph& graph, int k,
                    const OracleOptions& options) {
  const CouplingDistribution unit_variance(CouplingKind::rademacher);
  return std::abs(expected_moment(graph, unit_variance, k, options).part_B);
}

}  // namespace qsg
